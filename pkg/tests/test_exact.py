from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from iwcontract import exact

small = st.integers(-20, 20)
fracs = st.fractions(min_value=-10, max_value=10, max_denominator=7)


def matrices(elems, max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r)))


def square(elems, max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda n: st.lists(st.lists(elems, min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices(fracs))
def test_rank_matches_sympy(M):
    assert exact.rank(M) == sympy.Matrix(M).rank()


@given(square(fracs))
def test_det_matches_sympy(M):
    assert exact.det(M) == Fraction(str(sympy.Matrix(M).det()))


@given(matrices(small))
def test_nullspace_vectors_are_killed(M):
    ncols = len(M[0])
    ker = exact.nullspace(M, ncols)
    assert len(ker) == ncols - exact.rank(M)
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


@given(square(small, 4))
def test_inverse_or_singular(M):
    if exact.det(M) == 0:
        with pytest.raises(ZeroDivisionError):
            exact.inverse(M)
    else:
        inv = exact.inverse(M)
        n = len(M)
        prod = exact.matmul(M, inv)
        assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


@given(st.integers(1, 3).flatmap(lambda k: st.lists(small, min_size=k * (2 * k - 1), max_size=k * (2 * k - 1))))
def test_pfaffian_squared_is_det(entries):
    n = int((1 + (1 + 8 * len(entries)) ** 0.5) / 2)
    A = [[0] * n for _ in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            A[i][j] = next(it)
            A[j][i] = -A[i][j]
    assert exact.pfaffian(A) ** 2 == exact.det(A)


def test_pfaffian_of_standard_block():
    assert exact.pfaffian([[0, 1], [-1, 0]]) == 1
    assert exact.pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]]) == 0


def test_rational_strings():
    assert exact.rational_str(Fraction(6, 3)) == "2"
    assert exact.rational_str(Fraction(-1, 2)) == "-1/2"
    assert isinstance(exact.norm(Fraction(4, 2)), int)


def test_solve_unique():
    assert exact.solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
