"""Hilbert functions and the closed-form Caratheodory bounds built from them.

Profiles are closed-form evaluators ``j -> HF(j)``; nothing here touches
ideals directly.  All values are exact integers or fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import binom

PARITIES = ("even", "odd")
DOMAINS = ("rn", "cube")


class HilbertProfile:
    """Base class: call the profile with a degree to get ``HF(j)``."""

    kind = "abstract"

    def __call__(self, j: int):
        if j < 0:
            return 0
        return self._value(j)

    def _value(self, j: int):
        raise NotImplementedError


@dataclass(frozen=True)
class ProjectiveSpace(HilbertProfile):
    """Homogeneous coordinate ring of ``P^n``: ``HF(j) = C(n+j, n)``."""

    n: int
    kind = "projective-space"

    def _value(self, j):
        return binom(self.n + j, self.n)


@dataclass(frozen=True)
class RegularQuotient(HilbertProfile):
    """Quotient of ``base`` by a regular sequence of ``r`` forms of degree ``d``."""

    base: HilbertProfile
    r: int
    d: int
    kind = "regular-quotient"

    def _value(self, j):
        return hf_regular_quotient(self.base, self.r, self.d, j)


@dataclass(frozen=True)
class Sphere(HilbertProfile):
    """Projective closure of the unit sphere in ``R^n``."""

    n: int
    kind = "sphere"

    def _value(self, j):
        return sphere_hilbert(self.n, j)


@dataclass(frozen=True)
class PolynomialProfile(HilbertProfile):
    """A Hilbert polynomial given by ascending coefficients.

    Evaluated as a polynomial for every ``j >= 0`` (zero below), which is
    only the Hilbert function for large enough ``j``.
    """

    coefficients: tuple
    kind = "abstract-polynomial"

    def __init__(self, coefficients):
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in coefficients))

    def _value(self, j):
        v = sum(c * j ** i for i, c in enumerate(self.coefficients))
        return int(v) if v.denominator == 1 else v


def hf_regular_quotient(base, r: int, d: int, j: int):
    """``sum_i (-1)^i C(r,i) HF_base(j - i d)`` with ``HF_base(m) = 0`` for ``m < 0``."""
    if r < 0 or d < 1:
        raise ValueError("need r >= 0 and d >= 1")
    return sum((-1) ** i * binom(r, i) * base(j - i * d) for i in range(r + 1))


def sphere_hilbert(n: int, j: int) -> int:
    if n < 2:
        raise ValueError("sphere needs ambient dimension n >= 2")
    if j < 0:
        return 0
    return binom(n + j - 1, j) + binom(n + j - 2, j - 1)


def _check_grid_args(n, d, parity, domain):
    if n < 1 or d < 1:
        raise ValueError(f"need n, d >= 1, got n={n}, d={d}")
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    if domain not in DOMAINS:
        raise ValueError(f"domain must be one of {DOMAINS}, got {domain!r}")


def grid_degree(d: int, parity: str) -> int:
    return 2 * d + (parity == "odd")


def grid_cara_closed_form(n: int, d: int, parity: str, domain: str) -> int:
    """Caratheodory number of the unit-weight grid functional, in closed form.

    ``rn`` uses the grid ``{1..d}^n`` and ``cube`` the grid ``{0..d}^n``; the
    functional lives on polynomials of degree ``2d`` (even) or ``2d+1`` (odd).
    """
    _check_grid_args(n, d, parity, domain)
    if domain == "rn":
        if parity == "even":
            return binom(n + 2 * d, n) - n * binom(n + d, n) + binom(n, 2)
        value = binom(n + 2 * d + 1, n) - n * binom(n + d + 1, n) + 3 * binom(n + 1, 3)
        if d == 1:
            # third alternating term survives only when 2d+1-3d >= 0
            value -= binom(n, 3)
        return value
    if parity == "even":
        return binom(n + 2 * d, n) - n * binom(n + d - 1, n)
    return binom(n + 2 * d + 1, n) - n * binom(n + d, n)


def asymptotic_ratio(n: int, d: int, parity: str, domain: str) -> Fraction:
    """Closed-form Caratheodory number over the full basis size, exactly."""
    _check_grid_args(n, d, parity, domain)
    return Fraction(grid_cara_closed_form(n, d, parity, domain),
                    binom(n + grid_degree(d, parity), n))


def ratio_limit(k: int) -> Fraction:
    """Large-degree limit ``1 - k / 2^k`` of the lower/upper ratio."""
    return 1 - Fraction(k, 2 ** k)


@dataclass(frozen=True)
class BoundReport:
    lower: object
    upper: object
    regime_note: str

    @property
    def regime_violation(self) -> bool:
        """True when the numbers cannot be valid bounds at this degree."""
        return self.lower < 0 or self.upper < 0 or self.lower > self.upper


_LARGE_D = ("valid only for sufficiently large d; no effective threshold "
            "is known in general")


def variety_bounds(P: HilbertProfile, k: int, d: int) -> BoundReport:
    """Bounds ``P(2d) - k P(d) + C(k,2)`` and ``P(2d) - 1`` for a k-dimensional variety."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    lower = P(2 * d) - k * P(d) + binom(k, 2)
    upper = P(2 * d) - 1
    note = _LARGE_D
    if lower < 0 or upper < 0 or lower > upper:
        note = (f"regime violation at d={d}: lower={lower}, upper={upper} "
                f"cannot both hold; " + _LARGE_D)
    return BoundReport(lower, upper, note)


def curve_bounds(e: int, d: int) -> BoundReport:
    """Bounds ``d e`` and ``d e + 1`` for a smooth compact curve of degree ``e``."""
    if e < 1 or d < 1:
        raise ValueError("need e >= 1 and d >= 1")
    return BoundReport(d * e, d * e + 1, _LARGE_D)
