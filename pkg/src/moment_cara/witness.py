"""Explicit boundary moment functionals and constructive atom reduction.

A grid witness is the unit-weight measure on ``{1..d}^n`` (``rn``) or
``{0..d}^n`` (``cube``).  Its support is the zero set of a sum of squares
that the functional annihilates, so its Caratheodory number is the rank of
the atom evaluation matrix.  That rank is computed exactly here and
compared with the closed form from :mod:`moment_cara.hilbert`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import binom, enum_multi_indices, rat_kernel_vector, rat_rank, to_fraction
from .errors import CaraError, GridTooLargeError, InterpolationError
from .hilbert import _check_grid_args, grid_cara_closed_form, grid_degree
from .moments import (AtomicMeasure, MomentSequence, atomic_moments, eval_vector,
                      evaluation_matrix, riesz_apply)

DEFAULT_MAX_GRID = 20_000


def grid_nodes(d: int, domain: str) -> range:
    return range(1, d + 1) if domain == "rn" else range(0, d + 1)


def grid_points(n: int, d: int, domain: str) -> list:
    return list(itertools.product(grid_nodes(d, domain), repeat=n))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class Certificate:
    """Sum of squares ``sum_i f(x_i)^2`` vanishing exactly on a grid.

    ``factor`` holds the ascending integer coefficients of the univariate
    ``f`` (roots ``1..d`` for ``rn``, ``0..d`` for ``cube``); the same factor
    is used in every coordinate.
    """

    n: int
    d: int
    domain: str
    factor: tuple

    @property
    def factors(self) -> list:
        return [self.factor] * self.n

    @property
    def degree(self) -> int:
        return 2 * (len(self.factor) - 1)

    def __call__(self, point) -> Fraction:
        point = tuple(point) if hasattr(point, "__iter__") else (point,)
        return sum((Fraction(_poly_eval(self.factor, to_fraction(x))) ** 2 for x in point),
                   Fraction(0))

    def as_polynomial(self) -> dict:
        """Coefficients ``{alpha: c}`` of the composite in the monomial basis."""
        sq = _poly_mul(list(self.factor), list(self.factor))
        poly = {}
        for i in range(self.n):
            for e, c in enumerate(sq):
                if c:
                    alpha = tuple(e if t == i else 0 for t in range(self.n))
                    poly[alpha] = poly.get(alpha, 0) + c
        return {a: Fraction(c) for a, c in poly.items() if c}


def certificate(n: int, d: int, domain: str) -> Certificate:
    """Grid-vanishing sum of squares built from ``prod_j (x_i - j)``."""
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    if domain not in ("rn", "cube"):
        raise ValueError(f"unknown domain {domain!r}")
    f = [1]
    for root in grid_nodes(d, domain):
        f = _poly_mul(f, [-root, 1])
    return Certificate(n, d, domain, tuple(f))


@dataclass(frozen=True)
class GridWitness:
    n: int
    d: int
    parity: str
    domain: str
    grid: tuple
    measure: AtomicMeasure
    sequence: MomentSequence
    certified_cara: int
    closed_form: int

    @property
    def matches(self) -> bool:
        return self.certified_cara == self.closed_form

    @property
    def degree(self) -> int:
        return self.sequence.degree

    def certificate(self) -> Certificate:
        return certificate(self.n, self.d, self.domain)

    def certificate_value(self) -> Fraction:
        """``L(p)`` for the grid certificate ``p``.

        The cube certificate has degree ``2d+2``, above the witness degree;
        the grid functional is then applied to moments of the same measure
        taken up to the certificate degree.
        """
        cert = self.certificate()
        s = self.sequence
        if cert.degree > s.degree:
            s = atomic_moments(self.measure, self.n, cert.degree)
        return riesz_apply(s, cert.as_polynomial())


def build_grid_witness(n: int, d: int, parity: str, domain: str,
                       max_grid: int | None = DEFAULT_MAX_GRID) -> GridWitness:
    """Build the grid functional and certify its Caratheodory number by exact rank."""
    _check_grid_args(n, d, parity, domain)
    size = len(grid_nodes(d, domain)) ** n
    if max_grid is not None and size > max_grid:
        raise GridTooLargeError(
            f"grid has {size} points (matrix {size} x "
            f"{binom(n + grid_degree(d, parity), n)}), above the cap of {max_grid}")
    D = grid_degree(d, parity)
    pts = grid_points(n, d, domain)
    E = evaluation_matrix(pts, n, D)
    rank = rat_rank(E)
    sums = [sum(col) for col in zip(*E)]
    seq = MomentSequence(n, D, tuple(Fraction(v) for v in sums))
    measure = AtomicMeasure.unit(pts, n)
    return GridWitness(n, d, parity, domain, tuple(pts), measure, seq, rank,
                       grid_cara_closed_form(n, d, parity, domain))


def boundary_cara(measure: AtomicMeasure, n: int, degree: int) -> int:
    """Exact rank of the atom evaluation matrix at ``degree``.

    This is the Caratheodory number of the measure's moments when its
    support is the full zero set of a nonnegative polynomial the functional
    annihilates.  Without such a certificate it is only a lower bound.
    """
    if not len(measure):
        return 0
    return rat_rank(evaluation_matrix(measure.points, n, degree))


class _EchelonBasis:
    """Incrementally maintained row-echelon basis over Q."""

    def __init__(self):
        self.rows = []  # (pivot column, normalized row)

    def reduce(self, v):
        v = [to_fraction(x) for x in v]
        for pc, row in self.rows:
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v) -> bool:
        v = self.reduce(v)
        pc = next((i for i, x in enumerate(v) if x), None)
        if pc is None:
            return False
        inv = 1 / v[pc]
        self.rows.append((pc, [x * inv for x in v]))
        return True

    def __len__(self):
        return len(self.rows)


def interpolation_points(n: int, degree: int, candidates) -> list:
    """Greedily pick points whose evaluations span the dual of ``R[x]_{<= degree}``.

    Every linear functional on that space is then a signed combination of
    point evaluations at the returned points.  Raises
    :class:`InterpolationError` if ``candidates`` runs out first.
    """
    m = binom(n + degree, n)
    basis = _EchelonBasis()
    chosen = []
    for p in candidates:
        p = tuple(p) if hasattr(p, "__iter__") else (p,)
        if basis.add(eval_vector(n, degree, p)):
            chosen.append(p)
            if len(chosen) == m:
                return chosen
    raise InterpolationError(
        f"candidate stream exhausted at rank {len(chosen)} of {m}", len(chosen))


def default_candidates(n: int):
    """Nonnegative integer lattice points in graded lexicographic order."""
    k = 0
    while True:
        yield from enum_multi_indices(n, k, "exactly")
        k += 1


def prune(measure: AtomicMeasure, n: int, degree: int) -> AtomicMeasure:
    """Caratheodory reduction of a positive atomic measure.

    While the atom evaluations at ``degree`` are linearly dependent, take a
    dependence ``sum v_i s(x_i) = 0`` with some ``v_i > 0``, move the weights
    by the largest step ``t = min_{v_i > 0} c_i / v_i`` and drop every atom
    whose weight reaches zero.  Moments up to ``degree`` are preserved
    exactly and the weights stay positive.
    """
    if not measure.is_positive:
        raise CaraError("pruning needs strictly positive weights")
    if measure.n != n:
        raise ValueError(f"measure lives in dimension {measure.n}, not {n}")
    points = list(measure.points)
    weights = list(measure.weights)
    while points:
        columns = evaluation_matrix(points, n, degree)
        v = rat_kernel_vector([list(r) for r in zip(*columns)])
        if v is None:
            break
        if not any(x > 0 for x in v):
            v = [-x for x in v]
        t = min(c / x for c, x in zip(weights, v) if x > 0)
        weights = [c - t * x for c, x in zip(weights, v)]
        keep = [i for i, c in enumerate(weights) if c != 0]
        points = [points[i] for i in keep]
        weights = [weights[i] for i in keep]
    return AtomicMeasure(n, tuple(zip(points, weights)))
