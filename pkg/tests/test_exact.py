from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from liesym import exact
from liesym.exact import frac_array

from conftest import rationals


def test_kernel_identity_is_trivial():
    assert exact.kernel(exact.identity(3)) == []


def test_kernel_zero_matrix_is_everything():
    basis = exact.kernel(exact.zeros(2, 2))
    assert len(basis) == 2
    assert exact.rank(exact.stack_rows(basis, 2)) == 2


def test_kernel_rank_one():
    (v,) = exact.kernel(frac_array([[1, 1], [2, 2]]))
    # hand elimination: x + y = 0
    assert v[0] == -v[1] != 0
    assert list(v) == [-1, 1]


def test_kernel_is_deterministic():
    m = frac_array([[0, 2, 4, 1], [0, 1, 2, 0]])
    a, b = exact.kernel(m), exact.kernel(m.copy())
    assert [list(x) for x in a] == [list(x) for x in b]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_kernel_against_sympy(rows):
    m = frac_array(rows)
    basis = exact.kernel(m)
    for k in basis:
        assert exact.is_zero(np.dot(m, k))
    oracle = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])
    assert exact.rank(m) == oracle.rank()
    assert exact.rank(m) + len(basis) == m.shape[1]
    if basis:
        assert exact.rank(exact.stack_rows(basis, m.shape[1])) == len(basis)


def test_solve_zero_target():
    basis = [frac_array([1, 2, 0]), frac_array([0, 1, 1])]
    assert list(exact.solve_in_subspace(exact.zeros(3), basis)) == [0, 0]


def test_solve_first_basis_vector():
    basis = [frac_array([1, 2, 0]), frac_array([0, 1, 1])]
    assert list(exact.solve_in_subspace(basis[0], basis)) == [1, 0]


def test_solve_outside_span():
    basis = [frac_array([1, 2, 0]), frac_array([0, 1, 1])]
    assert exact.solve_in_subspace(frac_array([0, 0, 1]), basis) is None


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=1, max_size=3),
       st.lists(rationals, min_size=3, max_size=3))
def test_solve_round_trip(vectors, coeffs):
    basis = [frac_array(v) for v in vectors]
    target = sum((c * b for c, b in zip(coeffs, basis)), exact.zeros(3))
    sol = exact.solve_in_subspace(target, basis)
    assert sol is not None
    assert list(sum((c * b for c, b in zip(sol, basis)), exact.zeros(3))) == list(target)


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        exact.solve_in_subspace(exact.zeros(3), [exact.zeros(2)])


@pytest.mark.parametrize("g, expected", [
    ([[1, 0, 0], [0, 2, 0], [0, 0, 3]], True),
    ([[1, 0, 0], [0, -1, 0], [0, 0, 1]], False),
    ([[1, 1], [1, 2]], True),
    ([[1, 1], [1, 1]], False),
])
def test_positive_definite(g, expected):
    assert exact.is_positive_definite(frac_array(g)) is expected


def test_positive_definite_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        exact.is_positive_definite(frac_array([[1, 2], [0, 1]]))


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_parse_rational_grammar():
    assert exact.parse_rational("-3/4") == Fraction(-3, 4)
    assert exact.parse_rational("+7") == 7
    for bad in ["1.5", "1e3", "1/0", "1/-2", "", "one"]:
        with pytest.raises(ValueError):
            exact.parse_rational(bad)


def test_to_scalar_refuses_floats():
    with pytest.raises(TypeError):
        exact.to_scalar(0.5)


def test_inverse_and_det():
    m = frac_array([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert exact.det(m) == 18
    assert list(np.dot(m, exact.inverse(m)).flat) == list(exact.identity(3).flat)
    with pytest.raises(ValueError):
        exact.inverse(frac_array([[1, 2], [2, 4]]))
