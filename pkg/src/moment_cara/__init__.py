"""Exact Caratheodory-number bounds and certificates for truncated moment problems."""

__version__ = "0.1.0"

from .core import RationalMatrix, binom, enum_multi_indices, rat_kernel_vector, rat_rank
from .errors import CaraError
from .flat import flat_check, required_extension_degree, worst_case_table
from .hilbert import (ProjectiveSpace, Sphere, curve_bounds, grid_cara_closed_form,
                      variety_bounds)
from .moments import AtomicMeasure, MomentSequence, atomic_moments, hankel, riesz_apply, shift
from .recover import recover_atoms_1d
from .sparse import descartes_number, semigroup_invariants, sparse_cara_bounds
from .witness import build_grid_witness, certificate, interpolation_points, prune

__all__ = [
    "AtomicMeasure", "CaraError", "MomentSequence", "ProjectiveSpace", "RationalMatrix",
    "Sphere", "atomic_moments", "binom", "build_grid_witness", "certificate",
    "curve_bounds", "descartes_number", "enum_multi_indices", "flat_check",
    "grid_cara_closed_form", "hankel", "interpolation_points", "prune",
    "rat_kernel_vector", "rat_rank", "recover_atoms_1d", "required_extension_degree",
    "riesz_apply", "semigroup_invariants", "shift", "sparse_cara_bounds",
    "variety_bounds", "worst_case_table",
]
