"""Big-integer combinatorics and exact rational linear algebra.

Everything here is exact.  Matrices are plain nested sequences of ``int`` or
:class:`fractions.Fraction` (or a :class:`RationalMatrix`); vectors are
lists of :class:`Fraction`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import SingularSystemError

try:  # optional C backend for large exact ranks
    import flint as _flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    _flint = None

MultiIndex = tuple  # tuple[int, ...]
Rational = Union[int, Fraction]

# Matrices with more entries than this go to FLINT when it is installed.
BAREISS_MAX_ENTRIES = 20_000


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def degree(alpha: Sequence[int]) -> int:
    return sum(alpha)


def leq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Componentwise partial order on multi-indices."""
    return all(a <= b for a, b in zip(alpha, beta))


def _compositions(n: int, k: int):
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in _compositions(n - 1, k - first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def enum_multi_indices(n: int, d: int, mode: str = "at-most") -> tuple:
    """Multi-indices of ``n`` variables in graded lexicographic order.

    Within one total degree the indices ascend lexicographically, so for
    ``n=2, d=2`` the order is ``(0,0),(0,1),(1,0),(0,2),(1,1),(2,0)``.
    ``mode`` is ``"at-most"`` (all ``|alpha| <= d``) or ``"exactly"``.
    """
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    if mode == "exactly":
        return tuple(_compositions(n, d))
    if mode != "at-most":
        raise ValueError(f"unknown mode {mode!r}")
    out = []
    for k in range(d + 1):
        out.extend(_compositions(n, k))
    return tuple(out)


@lru_cache(maxsize=256)
def basis_index(n: int, d: int) -> dict:
    """Map multi-index -> position in :func:`enum_multi_indices` order."""
    return {alpha: i for i, alpha in enumerate(enum_multi_indices(n, d))}


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense exact-rational matrix (immutable)."""

    rows: tuple

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        data = tuple(tuple(to_fraction(v) for v in row) for row in rows)
        if data and len({len(r) for r in data}) != 1:
            raise ValueError("ragged rows")
        return cls(data)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.rows)))

    def __matmul__(self, vec):
        return [sum((a * to_fraction(b) for a, b in zip(row, vec)), Fraction(0)) for row in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


def _as_rows(M) -> list:
    if isinstance(M, RationalMatrix):
        return [list(r) for r in M.rows]
    return [list(r) for r in M]


def integer_rows(M) -> list:
    """Scale every row by the lcm of its denominators (rank preserving)."""
    out = []
    for row in _as_rows(M):
        if all(isinstance(v, int) for v in row):
            out.append(list(row))
            continue
        fr = [to_fraction(v) for v in row]
        lcm = 1
        for v in fr:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        out.append([v.numerator * (lcm // v.denominator) for v in fr])
    return out


def bareiss_rank(M) -> int:
    """Exact rank by fraction-free (Bareiss) elimination with full pivoting.

    The pivot is the nonzero entry of smallest magnitude in the trailing
    block; ties go to the lowest row, then the lowest column.
    """
    A = integer_rows(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    prev = 1
    r = 0
    while r < min(rows, cols):
        best = None
        for i in range(r, rows):
            row = A[i]
            for j in range(r, cols):
                v = row[j]
                if v:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        A[r], A[pi] = A[pi], A[r]
        if pj != r:
            for row in A:
                row[r], row[pj] = row[pj], row[r]
        piv = A[r]
        p = piv[r]
        tail = piv[r + 1:]
        for i in range(r + 1, rows):
            row = A[i]
            f = row[r]
            if f:
                row[r + 1:] = [(p * a - f * b) // prev for a, b in zip(row[r + 1:], tail)]
            elif p != prev:
                row[r + 1:] = [p * a // prev for a in row[r + 1:]]
            row[r] = 0
        prev = p
        r += 1
    return r


def rat_rank(M, method: str = "auto") -> int:
    """Exact rank over the rationals.

    ``method`` is ``"bareiss"`` (pure Python), ``"flint"`` (FLINT's
    fraction-free LU on the same integer-scaled rows) or ``"auto"``, which
    uses FLINT for matrices above :data:`BAREISS_MAX_ENTRIES` entries when
    python-flint is importable.
    """
    A = integer_rows(M)
    if not A or not A[0]:
        return 0
    if method == "auto":
        big = len(A) * len(A[0]) > BAREISS_MAX_ENTRIES
        method = "flint" if (big and _flint is not None) else "bareiss"
    if method == "bareiss":
        return bareiss_rank(A)
    if method == "flint":
        if _flint is None:
            raise RuntimeError("python-flint is not installed")
        return int(_flint.fmpz_mat(A).rank())
    raise ValueError(f"unknown method {method!r}")


def modular_rank(M, p: int) -> int:
    """Rank modulo the prime ``p``; a cross-check oracle, never a certificate.

    For integer matrices ``modular_rank(M, p) <= rat_rank(M)``, with equality
    unless ``p`` divides every maximal nonzero minor.
    """
    A = [[v % p for v in row] for row in integer_rows(M)]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], -1, p)
        prow = [v * inv % p for v in A[r]]
        A[r] = prow
        for i in range(r + 1, rows):
            f = A[i][c]
            if f:
                A[i] = [(a - f * b) % p for a, b in zip(A[i], prow)]
        r += 1
        if r == rows:
            break
    return r


def rref(M) -> tuple:
    """Reduced row echelon form over Q with partial pivoting in column order.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    A = [[to_fraction(v) for v in row] for row in _as_rows(M)]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        prow = [v * inv for v in A[r]]
        A[r] = prow
        for i in range(rows):
            if i != r:
                f = A[i][c]
                if f:
                    A[i] = [a - f * b for a, b in zip(A[i], prow)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def rat_kernel_vector(M):
    """A nonzero ``v`` with ``M v = 0``, or ``None`` if the columns are independent.

    The first free column of the reduced echelon form is set to 1 and every
    other free column to 0.
    """
    A = _as_rows(M)
    if not A:
        return None
    cols = len(A[0])
    R, pivots = rref(A)
    free = [j for j in range(cols) if j not in set(pivots)]
    if not free:
        return None
    j = free[0]
    v = [Fraction(0)] * cols
    v[j] = Fraction(1)
    for row, pc in zip(R, pivots):
        v[pc] = -row[j]
    return v


def rat_solve(M, b) -> list:
    """Exact solution of ``M x = b``.

    ``M`` must have full column rank and the system must be consistent;
    otherwise :class:`SingularSystemError` is raised.
    """
    A = _as_rows(M)
    if len(A) != len(b):
        raise ValueError("dimension mismatch between matrix and right-hand side")
    cols = len(A[0]) if A else 0
    aug = [list(row) + [to_fraction(bi)] for row, bi in zip(A, b)]
    R, pivots = rref(aug)
    if cols in pivots:
        raise SingularSystemError("inconsistent system: no exact solution")
    if len(pivots) < cols:
        raise SingularSystemError(
            f"singular system: rank {len(pivots)} < {cols} unknowns")
    x = [Fraction(0)] * cols
    for row, pc in zip(R, pivots):
        x[pc] = row[cols]
    return x


def mat_vec(M, v) -> list:
    return [sum((to_fraction(a) * to_fraction(b) for a, b in zip(row, v)), Fraction(0))
            for row in _as_rows(M)]
