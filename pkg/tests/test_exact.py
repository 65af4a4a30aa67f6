from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catfrob.exact import (DimensionError, RationalMatrix, as_rational, format_rational, kernel_basis, kron, rank,
                           rref, solve_linear, try_inverse)

M = RationalMatrix.from_rows
I = RationalMatrix.identity


def test_kron_identity_with_scalar():
    assert kron(I(2), M([[3]])) == M([[3, 0], [0, 3]])


def test_kron_block_layout():
    assert kron(M([[0, 1], [1, 0]]), M([[1, 2], [3, 4]])) == M(
        [[0, 0, 1, 2], [0, 0, 3, 4], [1, 2, 0, 0], [3, 4, 0, 0]])


def test_kron_with_unit_is_neutral():
    a = M([[1, "1/2"], [0, -3]])
    assert kron(a, I(1)) == a
    assert kron(I(1), a) == a


def test_kernel_of_row_vector():
    assert kernel_basis(M([[1, 1]])) == M([[-1], [1]])


def test_kernel_of_identity_is_empty():
    k = kernel_basis(I(3))
    assert k.shape == (3, 0)


def test_kernel_of_zero_map():
    assert kernel_basis(RationalMatrix.zeros(2, 2)) == I(2)


def test_inverse_examples():
    assert try_inverse(M([[2]])) == M([["1/2"]])
    assert try_inverse(M([[1, 1], [1, 1]])) is None
    assert try_inverse(M([[1, 1], [0, 1]])) == M([[1, -1], [0, 1]])
    assert try_inverse(M([[1, 2, 3]])) is None


def test_solve_examples():
    b = M([[1], [5]])
    assert solve_linear(I(2), b) == b
    assert solve_linear(M([[1, 1]]), M([[3]])) == M([[3], [0]])
    assert solve_linear(M([[0]]), M([[1]])) is None
    with pytest.raises(DimensionError):
        solve_linear(I(2), M([[1]]))


def test_shape_mismatch_raises():
    with pytest.raises(DimensionError):
        _ = M([[1, 2]]) @ M([[1, 2]])


def test_entries_stay_in_lowest_terms():
    a = M([["2/4", "6/3"]])
    assert a[0, 0] == Fraction(1, 2)
    assert a[0, 1] == 2 and type(a[0, 1]) is int
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_empty_matrices():
    z = RationalMatrix.zeros(0, 3)
    assert (z @ RationalMatrix.zeros(3, 2)).shape == (0, 2)
    assert kernel_basis(z) == I(3)
    assert try_inverse(RationalMatrix.zeros(0, 0)) == RationalMatrix.zeros(0, 0)


def test_rref_pivots():
    r, piv = rref(M([[0, 2, 4], [1, 1, 1]]))
    assert piv == [0, 1]
    assert r == M([[1, 0, -1], [0, 1, 2]])


# -- properties -------------------------------------------------------------------

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = draw(st.integers(0, 3)) if rows is None else rows
    c = draw(st.integers(0, 3)) if cols is None else cols
    vals = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=r * c, max_size=r * c))
    return RationalMatrix.from_entries(r, c, vals)


@settings(max_examples=60, deadline=None)
@given(matrices(), matrices(), matrices())
def test_kron_is_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_kron_interchange(data):
    n, m, p, q, r, s = (data.draw(st.integers(0, 2)) for _ in range(6))
    a, c = data.draw(matrices(n, m)), data.draw(matrices(m, p))
    b, d = data.draw(matrices(q, r)), data.draw(matrices(r, s))
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel(f):
    k = kernel_basis(f)
    assert (f @ k).is_zero()
    assert rank(f) + k.cols == f.cols


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 3).flatmap(lambda n: matrices(n, n)))
def test_inverse_is_involutive(f):
    g = try_inverse(f)
    if g is None:
        assert rank(f) < f.rows
    else:
        assert f @ g == I(f.rows) and g @ f == I(f.rows)
        assert try_inverse(g) == f


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_solve_is_a_solution(data):
    a = data.draw(matrices())
    b = data.draw(matrices(a.rows, data.draw(st.integers(0, 2))))
    x = solve_linear(a, b)
    if x is not None:
        assert a @ x == b
    else:
        assert rank(a.hstack(b)) > rank(a)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_transpose_reverses_products(data):
    a = data.draw(matrices())
    b = data.draw(matrices(a.cols, data.draw(st.integers(0, 3))))
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
