from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given

from liesym import catalog as cat
from liesym import curvature as cv
from liesym import exact, liealg
from liesym.exact import frac_array, unit

import invariants as inv
from conftest import CATALOG_CASES, build, case_id, unimodular_algebras


def cheeger_ebin_numerator(a, x, y):
    """<R(x,y)y,x> from brackets only, with <U(x,y),z> = (<[z,x],y> + <x,[z,y]>)/2."""
    ginv = exact.inverse(a.g)

    def u(p, q):
        low = frac_array([(a.inner(a.bracket(z, p), q) + a.inner(p, a.bracket(z, q))) / 2
                          for z in a.basis()])
        return np.dot(ginv, low)

    xy = a.bracket(x, y)
    return (-Fraction(3, 4) * a.inner(xy, xy)
            - a.inner(a.bracket(x, xy), y) / 2
            - a.inner(a.bracket(y, a.bracket(y, x)), x) / 2
            + a.inner(u(x, y), u(x, y)) - a.inner(u(x, x), u(y, y)))


def connection_via_u(a):
    """nabla_X Y = [X,Y]/2 + U(X,Y), an independent route to the connection."""
    n = a.n
    ginv = exact.inverse(a.g)
    out = exact.zeros(n, n, n)
    e = a.basis()
    for i in range(n):
        for j in range(n):
            low = frac_array([(a.inner(a.bracket(z, e[i]), e[j]) + a.inner(e[i], a.bracket(z, e[j]))) / 2
                              for z in e])
            out[:, i, j] = a.bracket(e[i], e[j]) / 2 + np.dot(ginv, low)
    return out


def test_heisenberg_connection_table():
    a = cat.get("H1", "standard")
    gam = cv.levi_civita(a)
    e = a.basis()

    def nab(i, j):
        return list(gam.data[:, i, j])

    half = Fraction(1, 2)
    assert nab(0, 1) == list(half * e[2])
    assert nab(1, 0) == list(-half * e[2])
    assert nab(2, 0) == nab(0, 2) == list(-half * e[1])
    assert nab(2, 1) == nab(1, 2) == list(half * e[0])
    for i in range(3):
        assert nab(i, i) == [0, 0, 0]


def test_abelian_connection_vanishes():
    assert cv.levi_civita(cat.get("R3", "standard")).is_zero()


def test_e11_connection_entry():
    a = cat.get("E11", "g_n", 1)
    # nabla_X1 X3 = -X1 by hand from the Koszul formula
    assert list(cv.levi_civita(a).data[:, 0, 2]) == [-1, 0, 0]


@pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
def test_connection_matches_independent_route(case):
    a = build(case)
    assert np.all(cv.levi_civita(a).data == connection_via_u(a))


@given(unimodular_algebras())
def test_connection_properties(a):
    gam = cv.levi_civita(a)
    assert inv.metric_compatible(a, gam)
    assert inv.torsion_free(a, gam)
    assert np.all(gam.data == connection_via_u(a))


def test_flat_examples():
    for a in (cat.get("E2tilde", "flat", 1, 1), cat.get("R3", "standard")):
        jets = cv.CurvatureJets(a)
        assert jets.R.is_zero()
        assert jets[1].is_zero()


def test_bi_invariant_su2():
    a = cat.get("SU2", "g_lmn", 1, 1, 1)
    jets = cv.CurvatureJets(a)
    e = a.basis()
    assert cv.sectional_curvature(a, jets.R, e[0], e[1]) == Fraction(1, 4)
    for x in e:
        for y in e:
            for z in e:
                assert list(jets.R(x, y, z)) == list(-a.bracket(a.bracket(x, y), z) / 4)
    assert jets[1].is_zero()


def test_heisenberg_not_locally_symmetric():
    a = cat.get("H1", "standard")
    jets = cv.CurvatureJets(a)
    assert not jets[1].is_zero()
    assert cv.sectional_curvature(a, jets.R, unit(3, 0), unit(3, 1)) == Fraction(-3, 4)


def test_sectional_rejects_dependent():
    a = cat.get("H1", "standard")
    jets = cv.CurvatureJets(a)
    with pytest.raises(ValueError):
        cv.sectional_curvature(a, jets.R, unit(3, 0), 2 * unit(3, 0))


@pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
def test_sectional_against_cheeger_ebin(case):
    a = build(case)
    jets = cv.CurvatureJets(a)
    vecs = a.basis() + [frac_array([1, 1, 0]), frac_array([0, 2, -1]), frac_array([1, "1/2", 3])]
    for x, y in combinations(vecs, 2):
        area = a.inner(x, x) * a.inner(y, y) - a.inner(x, y) ** 2
        if area == 0:
            continue
        assert cv.sectional_curvature(a, jets.R, x, y) == cheeger_ebin_numerator(a, x, y) / area


@given(unimodular_algebras())
def test_curvature_symmetries_random(a):
    jets = cv.CurvatureJets(a)
    assert all(inv.curvature_symmetries(a, jets.R).values())
    assert inv.second_bianchi(jets[1])


def test_plane_basis_independence():
    a = cat.get("SL2R", "g_lmn", 1, 2, 1)
    r = cv.CurvatureJets(a).R
    x, y = frac_array([1, 2, 0]), frac_array([0, 1, 3])
    k = cv.sectional_curvature(a, r, x, y)
    assert cv.sectional_curvature(a, r, 2 * x + y, x - 3 * y) == k


@pytest.mark.parametrize("case", CATALOG_CASES, ids=case_id)
def test_sectional_invariant_under_automorphism(case, rng):
    a = build(case)
    t = liealg.random_automorphism(a, case[0], rng)
    b = liealg.apply_automorphism(a, t)
    ra, rb = cv.CurvatureJets(a).R, cv.CurvatureJets(b).R
    x, y = unit(3, 0), frac_array([0, 1, 1])
    assert cv.sectional_curvature(b, rb, x, y) == cv.sectional_curvature(a, ra, np.dot(t, x), np.dot(t, y))


def test_flags_examples():
    f = cv.flags(cat.get("E2tilde", "flat", 1, 1))
    assert f.flat and f.locally_symmetric and f.constant_curvature and f.curvature_constant == 0
    f = cv.flags(cat.get("E11", "g_n", 1))
    assert not f.flat and not f.locally_symmetric and not f.constant_curvature
    f = cv.flags(cat.get("R3", "standard"))
    assert f.flat and f.curvature_constant == 0
    f = cv.flags(cat.get("SU2", "g_lmn", 2, 2, 2))
    assert f.locally_symmetric and f.constant_curvature and f.curvature_constant == Fraction(1, 8)
    f = cv.flags(cat.get("SU2", "g_lmn", 2, 1, 1))
    assert not f.constant_curvature and not f.locally_symmetric


def test_jets_cap():
    jets = cv.CurvatureJets(cat.get("H1", "standard"))
    assert jets.cap == 5
    with pytest.raises(cv.CapExceeded):
        jets[6]


def test_covariant_derivative_rank():
    a = cat.get("H1", "standard")
    jets = cv.CurvatureJets(a)
    assert jets[2].rank == 5
