"""Flat-extension analysis.

A flat extension of a functional on ``R[x]_{<=2d}`` to degree ``2D`` has a
Hankel matrix of size ``C(n+D, n)`` whose rank is at least the
Caratheodory number of the functional.  For the grid witness this forces
``D`` up, and for large ``n`` all the way to ``D = 2d``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import NamedTuple

from .core import binom
from .errors import DegreeError
from .hilbert import grid_cara_closed_form
from .moments import MomentSequence, hankel


@dataclass(frozen=True)
class FlatReport:
    n: int
    d: int
    cara_lower: int
    required_D: int
    worst_case: bool
    minimal: bool = False


def required_extension_degree(n: int, d: int) -> FlatReport:
    """Smallest ``D`` in ``[d, 2d]`` with ``C(n+D, n) >= C`` for the grid witness.

    ``C(n+D, n)`` grows with ``D``, so the first passing ``D`` is found by
    bisection; this keeps ``d = 10**15`` cheap.
    """
    if n < 1 or d < 1:
        raise ValueError("need n, d >= 1")
    C = grid_cara_closed_form(n, d, "even", "rn")
    lo, hi = d, 2 * d
    while lo < hi:
        mid = (lo + hi) // 2
        if binom(n + mid, n) >= C:
            hi = mid
        else:
            lo = mid + 1
    return FlatReport(n, d, C, lo, lo == 2 * d)


def is_worst_case(n: int, d: int) -> bool:
    """True iff even ``D = 2d - 1`` is too small for the grid witness."""
    return binom(n + 2 * d - 1, n) < grid_cara_closed_form(n, d, "even", "rn")


def worst_case_table(n_range, d_range) -> list:
    """Reports for every ``(n, d)``; the least worst-case ``n`` per ``d`` is marked."""
    reports = []
    for d in d_range:
        first = None
        for n in n_range:
            r = required_extension_degree(n, d)
            if r.worst_case and first is None:
                first = n
                r = FlatReport(r.n, r.d, r.cara_lower, r.required_D, True, True)
            reports.append(r)
    return reports


def minimal_worst_cases(reports) -> list:
    return [(r.n, r.d) for r in reports if r.minimal]


_COLUMNS = ("n", "d", "C", "required_D", "worst_case")


def _row(r: FlatReport) -> dict:
    return {"n": r.n, "d": r.d, "C": r.cara_lower, "required_D": r.required_D,
            "worst_case": r.worst_case}


def table_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = _row(r)
        row["worst_case"] = str(r.worst_case).lower()
        writer.writerow(row)
    return buf.getvalue()


def table_to_json(reports) -> str:
    return json.dumps([dict(_row(r), minimal=r.minimal) for r in reports], sort_keys=True)


class FlatCheck(NamedTuple):
    rank_lower: int
    rank_upper: int
    flat: bool


def flat_check(s: MomentSequence, D: int) -> FlatCheck:
    """Compare ``rank H_D`` with ``rank H_{D+1}``; needs moments up to ``2D+2``."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    if s.degree < 2 * D + 2:
        raise DegreeError(f"flat check at D={D} needs degree {2 * D + 2}, have {s.degree}")
    lower = hankel(s, D).rank()
    upper = hankel(s, D + 1).rank()
    return FlatCheck(lower, upper, lower == upper)

