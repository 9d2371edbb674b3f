"""Univariate moment problems with gaps.

The function space is the monomial subring ``R = R[t^d1, ..., t^dr]`` of the
univariate polynomials.  Its exponent set is the numerical semigroup spanned
by the generators; the conductor, the gap count and the Descartes numbers of
that semigroup determine the Caratheodory bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

from .errors import EnumerationLimitError, RegimeError

DEFAULT_MAX_EXPONENTS = 22


@dataclass(frozen=True)
class SemigroupRing:
    generators: tuple
    conductor: int
    gaps: int
    _members: frozenset = field(repr=False, compare=False, default=frozenset())

    def __contains__(self, e: int) -> bool:
        return e >= self.conductor or e in self._members

    def exponents_upto(self, k: int) -> tuple:
        """Sorted exponents ``e <= k`` of monomials in the ring."""
        return tuple(e for e in range(k + 1) if e in self)

    def dim_upto(self, k: int) -> int:
        """Dimension of ``R_{<= k}``."""
        return len(self.exponents_upto(k)) if k >= 0 else 0

    @property
    def gap_list(self) -> tuple:
        return tuple(e for e in range(self.conductor) if e not in self._members)


def semigroup_invariants(generators) -> SemigroupRing:
    """Conductor and gaps of the numerical semigroup spanned by ``generators``.

    Reachable exponents are marked by dynamic programming until ``min(gens)``
    consecutive exponents are present; from there on every exponent is.
    """
    gens = tuple(sorted(set(int(g) for g in generators)))
    if not gens or gens[0] <= 0:
        raise ValueError("generators must be a nonempty list of positive integers")
    if reduce(math.gcd, gens) != 1:
        raise RegimeError(f"gcd of generators {list(gens)} is not 1; conductor undefined")
    m = gens[0]
    reach = [True]
    run = 1 if m == 1 else 0
    start = 0
    e = 0
    while run < m:
        e += 1
        hit = any(e - g >= 0 and reach[e - g] for g in gens)
        reach.append(hit)
        if hit:
            if run == 0:
                start = e
            run += 1
        else:
            run = 0
    conductor = start
    members = frozenset(i for i in range(conductor) if reach[i])
    gaps = conductor - len(members)
    return SemigroupRing(gens, conductor, gaps, members)


def sign_variations(seq) -> int:
    """Number of sign changes after erasing zeros."""
    prev = 0
    count = 0
    for v in seq:
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


@dataclass(frozen=True)
class DescartesResult:
    k: int
    value: int
    exponents: tuple
    signs: tuple

    @property
    def witness_signs(self) -> dict:
        return dict(zip(self.exponents, self.signs))

    def variations(self) -> tuple:
        """(positive-axis, negative-axis) sign variations of the witness."""
        neg = [s * (-1) ** e for e, s in zip(self.exponents, self.signs)]
        return sign_variations(self.signs), sign_variations(neg)


def descartes_number(ring: SemigroupRing, k: int,
                     max_exponents: int | None = DEFAULT_MAX_EXPONENTS) -> DescartesResult:
    """Descartes number ``D_k`` together with a maximizing sign pattern.

    ``D_k`` is the maximum, over sign patterns on the exponents ``<= k`` with a
    nonzero constant term, of the variations of the pattern plus those of
    the pattern with odd exponents flipped.  The maximum is taken exactly by
    dynamic programming over (last nonzero sign, parity of its exponent),
    which visits every pattern implicitly.  The returned witness is the
    lexicographically smallest maximizer under ``-1 < 0 < 1``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    exps = ring.exponents_upto(k)
    if max_exponents is not None and len(exps) > max_exponents:
        raise EnumerationLimitError(
            f"{len(exps)} exponents <= {k} exceed the enumeration limit of {max_exponents}")
    m = len(exps)
    states = [(s, par) for s in (-1, 1) for par in (0, 1)]

    def gain(state, sigma, e):
        s, par = state
        return int(sigma != s) + int(sigma * (-1) ** e != s * (-1) ** par)

    # best[i][state]: most variations collectable from exps[i:] given state
    best = [dict() for _ in range(m + 1)]
    for st in states:
        best[m][st] = 0
    for i in range(m - 1, 0, -1):
        e = exps[i]
        for st in states:
            options = [best[i + 1][st]]
            for sigma in (-1, 1):
                options.append(gain(st, sigma, e) + best[i + 1][(sigma, e % 2)])
            best[i][st] = max(options)

    value = best[1][(-1, 0)] if m > 1 else 0
    signs = [-1]
    st = (-1, 0)
    remaining = value
    for i in range(1, m):
        e = exps[i]
        for sigma in (-1, 0, 1):
            if sigma == 0:
                g, nxt = 0, st
            else:
                g, nxt = gain(st, sigma, e), (sigma, e % 2)
            if g + best[i + 1][nxt] == remaining:
                signs.append(sigma)
                remaining -= g
                st = nxt
                break
    return DescartesResult(k, value, exps, tuple(signs))


def _ceil_half(x: int) -> int:
    return -((-x) // 2)


def _defect(ring: SemigroupRing) -> int:
    """``conductor - D_conductor`` (zero for the full polynomial ring)."""
    c = ring.conductor
    return c - descartes_number(ring, c).value


def nonneg_zero_bounds(ring: SemigroupRing, k: int) -> tuple:
    """Bracket on the largest zero count of a nonnegative element of ``R_{<=2k}``."""
    if k < ring.conductor:
        raise RegimeError(f"k={k} is below the conductor {ring.conductor}")
    delta = _defect(ring)
    return k - delta, k - _ceil_half(delta - 1)


def sparse_cara_bounds(ring: SemigroupRing, k: int) -> tuple:
    """``(lower, upper)`` Caratheodory bounds for moment functionals on ``R_{<=2k}``.

    Every moment functional is a conic combination of at most ``upper``
    point evaluations; some need at least ``lower``.
    """
    if k < ring.conductor:
        raise RegimeError(f"k={k} is below the conductor {ring.conductor}")
    delta = _defect(ring)
    return k - delta, k + 1 - _ceil_half(delta - 1)
