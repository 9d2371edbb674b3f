import csv
import io
import json
import time

import pytest

from moment_cara.core import binom
from moment_cara.errors import DegreeError
from moment_cara.flat import (flat_check, is_worst_case, minimal_worst_cases,
                              required_extension_degree, table_to_csv, table_to_json,
                              worst_case_table)
from moment_cara.hilbert import grid_cara_closed_form
from moment_cara.moments import AtomicMeasure, atomic_moments
from moment_cara.witness import grid_points


def linear_required_D(n, d):
    C = grid_cara_closed_form(n, d, "even", "rn")
    return next(D for D in range(d, 2 * d + 1) if binom(n + D, n) >= C)


def test_examples():
    r = required_extension_degree(9, 2)
    assert (r.cara_lower, r.required_D, r.worst_case) == (256, 4, True)
    r = required_extension_degree(2, 2)
    assert (r.cara_lower, r.required_D, r.worst_case) == (4, 2, False)


@pytest.mark.parametrize("n", range(1, 15))
@pytest.mark.parametrize("d", range(1, 8))
def test_bisection_matches_linear_scan(n, d):
    r = required_extension_degree(n, d)
    assert r.required_D == linear_required_D(n, d)
    assert r.worst_case == is_worst_case(n, d)


def test_minimal_worst_cases():
    reports = worst_case_table(range(1, 20), range(2, 7))
    assert minimal_worst_cases(reports) == [(9, 2), (7, 3), (6, 4), (6, 5), (6, 6)]


def test_d6_worst_case_for_all_larger_n():
    assert all(is_worst_case(n, 6) for n in range(6, 40))
    assert not is_worst_case(5, 6)


def test_huge_degree():
    t = time.perf_counter()
    assert is_worst_case(51, 10 ** 15)
    assert not is_worst_case(50, 10 ** 15)
    assert time.perf_counter() - t < 10


def test_csv_and_json():
    reports = worst_case_table(range(1, 13), [2])
    rows = list(csv.DictReader(io.StringIO(table_to_csv(reports))))
    assert list(rows[0]) == ["n", "d", "C", "required_D", "worst_case"]
    first = next(r for r in rows if r["worst_case"] == "true")
    assert first["n"] == "9"
    data = json.loads(table_to_json(reports))
    assert [r["n"] for r in data if r["minimal"]] == [9]


def test_flat_check():
    s = atomic_moments(AtomicMeasure.unit([(0,), (1,)]), 1, 6)
    assert tuple(flat_check(s, 2)) == (2, 2, True)
    assert not flat_check(s, 0).flat
    with pytest.raises(DegreeError):
        flat_check(s, 3)


def test_flat_check_on_grid_measure():
    m = AtomicMeasure.unit(grid_points(2, 2, "rn"))
    s = atomic_moments(m, 2, 6)
    res = flat_check(s, 2)
    assert res.flat and res.rank_lower == 4
