"""Truncated moment sequences, atomic measures and Hankel matrices.

All data is exact and indexed by multi-indices in graded lexicographic
order (see :func:`moment_cara.core.enum_multi_indices`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .core import (RationalMatrix, basis_index, enum_multi_indices, rat_rank,
                   to_fraction)
from .errors import DegreeError, MomentFormatError


@lru_cache(maxsize=128)
def _recurrence(n: int, D: int) -> tuple:
    """For each basis monomial after the first: (index of x^alpha / x_i, i)."""
    basis = enum_multi_indices(n, D)
    index = basis_index(n, D)
    steps = []
    for alpha in basis[1:]:
        i = next(t for t, a in enumerate(alpha) if a)
        parent = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
        steps.append((index[parent], i))
    return tuple(steps)


def eval_vector(n: int, D: int, x) -> list:
    """Monomial values ``x^alpha`` for all ``|alpha| <= D``.

    Integer points give ``int`` entries, anything else gives fractions.
    """
    x = tuple(x) if hasattr(x, "__iter__") else (x,)
    if len(x) != n:
        raise ValueError(f"point has {len(x)} coordinates, expected {n}")
    if not all(isinstance(c, int) for c in x):
        x = tuple(to_fraction(c) for c in x)
    out = [1]
    for parent, i in _recurrence(n, D):
        out.append(out[parent] * x[i])
    return out


@dataclass(frozen=True)
class MomentSequence:
    n: int
    degree: int
    values: tuple

    def __post_init__(self):
        expected = len(enum_multi_indices(self.n, self.degree))
        if len(self.values) != expected:
            raise ValueError(f"expected {expected} moments, got {len(self.values)}")

    @classmethod
    def from_values(cls, n: int, degree: int, values) -> "MomentSequence":
        return cls(n, degree, tuple(to_fraction(v) for v in values))

    @classmethod
    def from_dict(cls, n: int, degree: int, mapping: dict) -> "MomentSequence":
        basis = enum_multi_indices(n, degree)
        return cls(n, degree, tuple(to_fraction(mapping[a]) for a in basis))

    @property
    def basis(self) -> tuple:
        return enum_multi_indices(self.n, self.degree)

    def __getitem__(self, alpha) -> Fraction:
        alpha = tuple(alpha) if hasattr(alpha, "__iter__") else (alpha,)
        try:
            return self.values[basis_index(self.n, self.degree)[alpha]]
        except KeyError:
            raise DegreeError(f"moment {list(alpha)} is beyond degree {self.degree}") from None

    def as_dict(self) -> dict:
        return dict(zip(self.basis, self.values))

    def truncate(self, degree: int) -> "MomentSequence":
        if degree > self.degree:
            raise DegreeError(f"cannot truncate degree {self.degree} up to {degree}")
        m = len(enum_multi_indices(self.n, degree))
        return MomentSequence(self.n, degree, self.values[:m])


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite measure ``sum c_i delta_{x_i}``; weights may be signed."""

    n: int
    atoms: tuple  # ((point, weight), ...)

    def __post_init__(self):
        pts = [p for p, _ in self.atoms]
        if any(len(p) != self.n for p in pts):
            raise ValueError(f"all points must have {self.n} coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("atom points must be pairwise distinct")

    @classmethod
    def from_pairs(cls, pairs, n: int | None = None) -> "AtomicMeasure":
        atoms = []
        for point, weight in pairs:
            point = tuple(point) if hasattr(point, "__iter__") else (point,)
            atoms.append((tuple(to_fraction(c) for c in point), to_fraction(weight)))
        if n is None:
            if not atoms:
                raise ValueError("cannot infer dimension of an empty measure")
            n = len(atoms[0][0])
        return cls(n, tuple(atoms))

    @classmethod
    def unit(cls, points, n: int | None = None) -> "AtomicMeasure":
        return cls.from_pairs(((p, 1) for p in points), n)

    @property
    def points(self) -> list:
        return [p for p, _ in self.atoms]

    @property
    def weights(self) -> list:
        return [w for _, w in self.atoms]

    @property
    def is_positive(self) -> bool:
        return all(w > 0 for _, w in self.atoms)

    def __len__(self):
        return len(self.atoms)


def _int_point(p):
    return tuple(int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in p)


def evaluation_matrix(points, n: int, D: int) -> list:
    """Rows are the evaluation vectors of ``points`` at degree ``D``."""
    return [eval_vector(n, D, _int_point(p)) for p in points]


def atomic_moments(m: AtomicMeasure, n: int, D: int) -> MomentSequence:
    """``s_alpha = sum_i c_i x_i^alpha`` for every ``|alpha| <= D``."""
    if m.n != n:
        raise ValueError(f"measure lives in dimension {m.n}, not {n}")
    size = len(enum_multi_indices(n, D))
    acc = [0] * size
    for point, weight in m.atoms:
        row = eval_vector(n, D, _int_point(point))
        if weight == 1:
            acc = [a + b for a, b in zip(acc, row)]
        else:
            acc = [a + weight * b for a, b in zip(acc, row)]
    return MomentSequence(n, D, tuple(Fraction(v) for v in acc))


def poly_degree(p: dict) -> int:
    return max((sum(a) for a, c in p.items() if c != 0), default=0)


def riesz_apply(s: MomentSequence, p: dict) -> Fraction:
    """``L_s(p) = sum_alpha p_alpha s_alpha`` for ``p`` given as ``{alpha: coeff}``."""
    if poly_degree(p) > s.degree:
        raise DegreeError(f"polynomial of degree {poly_degree(p)} exceeds moment degree {s.degree}")
    index = basis_index(s.n, s.degree)
    total = Fraction(0)
    for alpha, c in p.items():
        if c:
            total += to_fraction(c) * s.values[index[tuple(alpha)]]
    return total


def shift(s: MomentSequence, beta) -> MomentSequence:
    """Shifted sequence ``(M_beta s)_alpha = s_{alpha+beta}`` of degree ``D - |beta|``."""
    beta = tuple(beta) if hasattr(beta, "__iter__") else (beta,)
    b = sum(beta)
    if len(beta) != s.n or min(beta) < 0:
        raise ValueError(f"shift must be a multi-index of length {s.n}")
    if b > s.degree:
        raise DegreeError(f"|beta|={b} exceeds degree {s.degree}")
    index = basis_index(s.n, s.degree)
    D = s.degree - b
    values = tuple(s.values[index[tuple(a + c for a, c in zip(alpha, beta))]]
                   for alpha in enum_multi_indices(s.n, D))
    return MomentSequence(s.n, D, values)


@dataclass(frozen=True)
class HankelMatrix:
    sub_degree: int
    matrix: RationalMatrix
    basis: tuple

    def rank(self) -> int:
        return rat_rank(self.matrix)


def hankel(s: MomentSequence, sub_degree: int) -> HankelMatrix:
    """Moment matrix ``(s_{alpha+beta})`` over the basis of degree ``<= sub_degree``."""
    if 2 * sub_degree > s.degree:
        raise DegreeError(f"Hankel sub-degree {sub_degree} needs moments of degree "
                          f"{2 * sub_degree}, have {s.degree}")
    basis = enum_multi_indices(s.n, sub_degree)
    index = basis_index(s.n, s.degree)
    rows = tuple(tuple(s.values[index[tuple(a + b for a, b in zip(alpha, beta))]] for beta in basis)
                 for alpha in basis)
    return HankelMatrix(sub_degree, RationalMatrix(rows), basis)


class HankelRank(NamedTuple):
    rank: int
    atoms: int
    independent: bool


def hankel_rank_analysis(m: AtomicMeasure, n: int, sub_degree: int) -> HankelRank:
    """Rank of the Hankel matrix of ``m`` against its atom count."""
    H = hankel(atomic_moments(m, n, 2 * sub_degree), sub_degree)
    r = H.rank()
    assert r <= len(m), "Hankel rank cannot exceed the number of atoms"
    return HankelRank(r, len(m), r == len(m))


# --- JSON ------------------------------------------------------------------

def format_rational(v) -> str:
    v = to_fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(text, where: str) -> Fraction:
    if isinstance(text, bool):
        raise MomentFormatError(f"invalid rational at {where}: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise MomentFormatError(f"invalid rational at {where}: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise MomentFormatError(f"invalid rational at {where}: {text!r}") from None


def moments_to_dict(s: MomentSequence) -> dict:
    return {
        "n": s.n,
        "degree": s.degree,
        "moments": [{"alpha": list(a), "value": format_rational(v)}
                    for a, v in zip(s.basis, s.values)],
    }


def _require(obj, key, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise MomentFormatError(f"missing field {key!r}")
    v = obj[key]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise MomentFormatError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(v, list):
        raise MomentFormatError(f"field {key!r} must be a list")
    return v


def moments_from_dict(obj) -> MomentSequence:
    n = _require(obj, "n", int)
    degree = _require(obj, "degree", int)
    if n < 1 or degree < 0:
        raise MomentFormatError("need n >= 1 and degree >= 0")
    entries = _require(obj, "moments", list)
    found = {}
    for entry in entries:
        alpha = _require(entry, "alpha", list)
        if len(alpha) != n or not all(isinstance(a, int) and not isinstance(a, bool) and a >= 0
                                      for a in alpha):
            raise MomentFormatError(f"malformed multi-index {alpha}")
        key = tuple(alpha)
        if sum(key) > degree:
            raise MomentFormatError(f"moment {alpha} exceeds degree {degree}")
        if key in found:
            raise MomentFormatError(f"duplicate moment {alpha}")
        if "value" not in entry:
            raise MomentFormatError(f"missing value for moment {alpha}")
        found[key] = parse_rational(entry["value"], f"moment {alpha}")
    values = []
    for alpha in enum_multi_indices(n, degree):
        if alpha not in found:
            raise MomentFormatError("missing moment [" + ",".join(map(str, alpha)) + "]")
        values.append(found[alpha])
    return MomentSequence(n, degree, tuple(values))


def measure_to_dict(m: AtomicMeasure) -> dict:
    return {
        "n": m.n,
        "atoms": [{"point": [format_rational(c) for c in p], "weight": format_rational(w)}
                  for p, w in m.atoms],
    }


def measure_from_dict(obj) -> AtomicMeasure:
    n = _require(obj, "n", int)
    entries = _require(obj, "atoms", list)
    pairs = []
    for i, entry in enumerate(entries):
        point = _require(entry, "point", list)
        if len(point) != n:
            raise MomentFormatError(f"atom {i} has {len(point)} coordinates, expected {n}")
        coords = tuple(parse_rational(c, f"atom {i} point") for c in point)
        if "weight" not in entry:
            raise MomentFormatError(f"missing weight for atom {i}")
        pairs.append((coords, parse_rational(entry["weight"], f"atom {i} weight")))
    try:
        return AtomicMeasure(n, tuple(pairs))
    except ValueError as exc:
        raise MomentFormatError(str(exc)) from None


def _load(source):
    try:
        if hasattr(source, "read"):
            return json.load(source)
        with open(source) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise MomentFormatError(f"malformed JSON: {exc}") from None


def _dump(obj, target):
    text = json.dumps(obj, indent=1)
    if hasattr(target, "write"):
        target.write(text + "\n")
    else:
        with open(target, "w") as fh:
            fh.write(text + "\n")


def read_moments(source) -> MomentSequence:
    return moments_from_dict(_load(source))


def write_moments(s: MomentSequence, target) -> None:
    _dump(moments_to_dict(s), target)


def read_measure(source) -> AtomicMeasure:
    return measure_from_dict(_load(source))


def write_measure(m: AtomicMeasure, target) -> None:
    _dump(measure_to_dict(m), target)
