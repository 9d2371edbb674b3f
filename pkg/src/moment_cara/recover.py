"""Numerical recovery of atoms from a univariate moment sequence.

For ``s = sum_i c_i s(z_i)`` with ``k <= d`` atoms, the positions are the
generalized eigenvalues of the pencil formed by the shifted and unshifted
Hankel matrices.  They are computed here as the roots of the Prony
polynomial: solve the ``k x k`` Hankel system for its coefficients and
find all ``k`` complex roots at once with the Aberth iteration.  Weights
then come from a Vandermonde solve.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, IllConditionedError, PreconditionError

COND_THRESHOLD = 1e12
ROOT_TOL = 1e-10
MAX_ITER = 500


@dataclass(frozen=True)
class RecoveryResult:
    atoms: np.ndarray
    weights: np.ndarray
    residual: float
    condition_estimate: float

    def moments(self, length: int) -> np.ndarray:
        powers = self.atoms[None, :] ** np.arange(length)[:, None]
        return powers @ self.weights

    def hankel(self, d: int) -> np.ndarray:
        """``V diag(c) V^T`` with ``V`` the degree-``d`` Vandermonde of the atoms."""
        V = self.atoms[None, :] ** np.arange(d + 1)[:, None]
        return V @ np.diag(self.weights) @ V.T

    def to_dict(self) -> dict:
        pair = lambda z: [float(z.real), float(z.imag)]  # noqa: E731
        return {
            "atoms": [pair(z) for z in self.atoms],
            "weights": [pair(c) for c in self.weights],
            "residual": float(self.residual),
            "condition_estimate": float(self.condition_estimate),
        }


def _horner(coeffs, z):
    """Value and derivative of the polynomial with descending ``coeffs`` at ``z``."""
    p = coeffs[0]
    dp = 0j
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs, tol: float = ROOT_TOL, max_iter: int = MAX_ITER) -> np.ndarray:
    """All complex roots of a polynomial given by descending coefficients.

    Stops once every correction is below ``tol`` relative to ``max(1, |z|)``.
    """
    coeffs = [complex(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    deg = len(coeffs) - 1
    if deg < 1:
        return np.zeros(0, dtype=complex)
    lead = coeffs[0]
    coeffs = [c / lead for c in coeffs]
    # roots lie inside the Cauchy radius
    radius = 1 + max(abs(c) for c in coeffs[1:])
    z = [0.5 * radius * complex(math.cos(t), math.sin(t))
         for t in (2 * math.pi * j / deg + 0.4 for j in range(deg))]
    for _ in range(max_iter):
        biggest = 0.0
        for i in range(deg):
            p, dp = _horner(coeffs, z[i])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            repel = sum(1 / (z[i] - z[j]) for j in range(deg) if j != i and z[i] != z[j])
            w = ratio / (1 - ratio * repel)
            z[i] -= w
            biggest = max(biggest, abs(w) / max(1.0, abs(z[i])))
        if biggest <= tol:
            return np.array(z)
    raise ConvergenceError(f"Aberth iteration did not converge in {max_iter} sweeps")


def recover_atoms_1d(s, k: int, cond_threshold: float = COND_THRESHOLD,
                     tol: float = ROOT_TOL, max_iter: int = MAX_ITER) -> RecoveryResult:
    """Recover ``k`` atoms from ``s_0, ..., s_{2d+1}``.

    Requires ``k <= d`` and a well-conditioned leading ``k x k`` Hankel block.
    """
    s = np.asarray(s, dtype=complex if np.iscomplexobj(s) else float)
    if s.ndim != 1 or len(s) < 2 or len(s) % 2:
        raise PreconditionError("need an even-length sequence s_0..s_{2d+1}")
    d = len(s) // 2 - 1
    if not 1 <= k <= d:
        raise PreconditionError(f"atom count k={k} must satisfy 1 <= k <= d={d}")
    H = np.array([[s[i + j] for j in range(k)] for i in range(k)])
    cond = float(np.linalg.cond(H))
    if not np.isfinite(cond) or cond > cond_threshold:
        raise IllConditionedError(
            f"Hankel block condition estimate {cond:.3g} exceeds {cond_threshold:.3g}")
    a = np.linalg.solve(H, -s[k:2 * k])
    # Prony polynomial z^k + a_{k-1} z^{k-1} + ... + a_0, descending
    atoms = aberth_roots([1.0] + list(a[::-1]), tol=tol, max_iter=max_iter)
    atoms = np.array(sorted(atoms, key=lambda z: (round(z.real, 12), round(z.imag, 12))))
    V = atoms[None, :] ** np.arange(k)[:, None]
    weights = np.linalg.solve(V, s[:k].astype(complex))
    fitted = (atoms[None, :] ** np.arange(len(s))[:, None]) @ weights
    residual = float(np.max(np.abs(fitted - s)))
    return RecoveryResult(atoms, weights, residual, cond)


def read_moment_values_1d(source) -> list:
    """Float moment values from univariate moment JSON (exact values are rounded)."""
    from .moments import read_moments

    seq = read_moments(source)
    if seq.n != 1:
        raise PreconditionError(f"atom recovery needs univariate moments, got n={seq.n}")
    return [float(v) for v in seq.values]


def result_json(result: RecoveryResult) -> str:
    return json.dumps(result.to_dict(), sort_keys=True)
