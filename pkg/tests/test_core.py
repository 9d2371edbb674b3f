from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from moment_cara.core import (RationalMatrix, bareiss_rank, basis_index, binom,
                              enum_multi_indices, integer_rows, mat_vec, modular_rank,
                              rat_kernel_vector, rat_rank, rat_solve, rref, to_fraction)
from moment_cara.errors import SingularSystemError

small_ints = st.integers(-6, 6)


def matrices(max_rows=6, max_cols=6, elements=small_ints):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def test_binom_outside_range():
    assert binom(5, -1) == 0
    assert binom(3, 5) == 0
    assert binom(10, 3) == 120


def test_multi_index_order():
    assert enum_multi_indices(2, 2) == ((0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0))
    assert enum_multi_indices(3, 2, "exactly") == (
        (0, 0, 2), (0, 1, 1), (0, 2, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0))
    idx = basis_index(2, 2)
    assert idx[(1, 1)] == 4


@pytest.mark.parametrize("n,d", [(1, 0), (1, 5), (2, 4), (3, 3), (4, 2)])
def test_multi_index_count(n, d):
    assert len(enum_multi_indices(n, d)) == binom(n + d, n)
    assert len(enum_multi_indices(n, d, "exactly")) == binom(n + d - 1, n - 1)


def test_to_fraction():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(5) == 5
    # binary floats convert to their exact value
    assert to_fraction(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        to_fraction("1/x")


def test_integer_rows_scaling():
    assert integer_rows([[Fraction(1, 2), Fraction(1, 3)]]) == [[3, 2]]


def test_rank_examples():
    assert rat_rank([[1, 2], [2, 4]]) == 1
    assert rat_rank([[Fraction(1, 2), 1], [1, 2], [0, 1]]) == 2
    assert rat_rank([[0, 0], [0, 0]]) == 0
    assert rat_rank(RationalMatrix.identity(4)) == 4


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_independent_oracles(rows):
    r = bareiss_rank(rows)
    assert r == rat_rank(rows, method="flint")
    assert r == sympy.Matrix(rows).rank()
    assert modular_rank(rows, 2_147_483_647) == r
    assert len(rref(rows)[1]) == r


@settings(max_examples=80, deadline=None)
@given(matrices(elements=st.fractions(min_value=-3, max_value=3, max_denominator=5)))
def test_rank_of_rational_matrix(rows):
    assert rat_rank(rows) == sympy.Matrix(rows).rank()


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_kernel_vector(rows):
    v = rat_kernel_vector(rows)
    cols = len(rows[0])
    if rat_rank(rows) == cols:
        assert v is None
    else:
        assert any(v)
        assert all(x == 0 for x in mat_vec(rows, v))


def test_rank_deficient_product_is_low_rank():
    # 7x7 matrix of rank 3 built as a product
    A = [[i + j for j in range(3)] for i in range(7)]
    B = [[(i * j) % 5 - 2 for j in range(7)] for i in range(3)]
    B[0][0] = 5
    M = [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(7)] for i in range(7)]
    assert rat_rank(M) == sympy.Matrix(M).rank()


def test_modular_rank_is_a_lower_bound():
    M = [[2, 0], [0, 3]]
    assert modular_rank(M, 2) == 1
    assert rat_rank(M) == 2


def test_solve():
    x = rat_solve([[2, 1], [1, 3]], [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    with pytest.raises(SingularSystemError):
        rat_solve([[1, 1], [1, 1]], [1, 2])
    with pytest.raises(SingularSystemError):
        rat_solve([[1, 1], [2, 2]], [1, 2])


def test_rational_matrix_ops():
    M = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert M.shape == (2, 2)
    assert M.transpose()[0, 1] == 3
    assert M @ [1, 1] == [3, 7]
    assert M.tolist() == [[1, 2], [3, 4]]
