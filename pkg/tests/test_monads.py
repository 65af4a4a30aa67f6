import pytest

from catfrob.algebras import group_algebra
from catfrob.categories import FINSET, FINVECT, GRVECT, ContractViolation, GradedSpace, probe_objects
from catfrob.exact import RationalMatrix
from catfrob.monads import (check_comonoidal_monad, check_monoidal_comonad, cofusion_left, cofusion_right,
                            cofusion_verdict, descent_type_check, fusion_left, fusion_right, hom_comonad,
                            identity_monad, induced_module_monad, is_injective_fn, is_left_hopf, is_right_hopf,
                            monic_check, set_product_monad)
from catfrob.reports import HOLDS, REFUTED

SETTINGS = ["trivial", "kz2", "sweedler", "graded", "finset_z2"]


@pytest.mark.parametrize("name", SETTINGS)
def test_induced_monad_laws(request, name):
    s = request.getfixturevalue(name)
    assert check_comonoidal_monad(s.t, s.probes).ok


def test_t2_at_unit_is_the_comultiplication(kz2):
    t, h = kz2.t, kz2.h
    assert FINVECT.equal(t.t2(1, 1), h.d)
    assert t.obj(3) == 6


def test_graded_t2_carries_koszul_sign(graded):
    t, c = graded.t, GRVECT
    odd = GradedSpace((1,))
    m = t.t2(odd, odd).mat
    # odd (x) x goes to (odd (x) 1) (x) (odd (x) x) up to the sign of passing x over odd
    assert -1 in {m[i, j] for i in range(m.rows) for j in range(m.cols)}
    assert c.is_morphism(t.t2(odd, odd))


def test_fusion_kz2_is_invertible_4x4(kz2):
    f = fusion_left(kz2.t, 1, 1)
    assert (f.mat.rows, f.mat.cols) == (4, 4)
    assert FINVECT.try_inverse(f) is not None
    assert FINVECT.try_inverse(fusion_right(kz2.t, 2, 1)) is not None


def test_fusion_finset_is_a_bijection_on_four_points():
    t = set_product_monad(2)
    f = fusion_left(t, 1, 1)
    assert f.dom == f.cod == 4 and is_injective_fn(f)


@pytest.mark.parametrize("name", SETTINGS)
def test_every_shipped_monad_is_hopf_and_of_descent_type(request, name):
    s = request.getfixturevalue(name)
    assert is_left_hopf(s.t, s.probes).status == HOLDS
    assert is_right_hopf(s.t, s.probes).status == HOLDS
    assert descent_type_check(s.t, s.probes).status == HOLDS
    assert monic_check(s.t, s.cat.unit(), s.probes).status == HOLDS


def test_identity_monad_is_trivial():
    t = identity_monad()
    assert t.obj(3) == 3
    assert FINVECT.equal(t.mu(2), FINVECT.id(2))


def test_hom_comonad_laws():
    g = hom_comonad(2)
    assert check_monoidal_comonad(g, probe_objects(FINSET, 0, 3)).ok


def test_cofusion_counts_at_two_point_sets():
    g = hom_comonad(2)
    f = cofusion_left(g, 2, 2)
    assert (FINSET.size(f.dom), FINSET.size(f.cod)) == (16, 64)
    v = cofusion_verdict(g, [2], "left")
    assert v.status == REFUTED
    assert v.witness == {"pair": [2, 2], "dom": 16, "cod": 64}


def test_cofusion_with_a_point_is_injective_but_not_onto():
    g = hom_comonad(2)
    for y in (1, 2, 3):
        f = cofusion_left(g, 1, y)
        assert is_injective_fn(f)
    f = cofusion_right(g, 1, 2)
    assert (f.dom, f.cod) == (4, 16)


def test_hom_comonad_of_trivial_group_is_identity():
    g = hom_comonad(1)
    assert g.obj(3) == 3
    assert FINSET.equal(cofusion_left(g, 2, 3), FINSET.id(6))
    assert cofusion_verdict(g, [1, 2, 3]).status == HOLDS


def test_corrupted_comultiplication_is_rejected():
    h = group_algebra(2)
    bad = h.replace(d=FINVECT.scale(h.d, 2))
    with pytest.raises(ContractViolation):
        induced_module_monad(bad)


def test_corrupted_multiplication_breaks_monad_laws():
    h = group_algebra(2)
    bad = h.replace(m=FINVECT.scale(h.m, 2))
    t = induced_module_monad(bad, validate=False)
    rep = check_comonoidal_monad(t, [1, 2])
    assert not rep.passed("monad.unit_left")


def test_fusion_matrix_oracle(kz2):
    # at X = Y = 1 the basis pair (h, g) goes to (g, hg)
    f = fusion_left(kz2.t, 1, 1).mat
    assert f == RationalMatrix.from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]])
