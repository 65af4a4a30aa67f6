import pytest

from catfrob.algebras import check_dual_pair, nilpotent_frobenius_ungraded
from catfrob.categories import FINSET, FINVECT, probe_objects
from catfrob.eilenberg_moore import em_unit, free_algebra, sign_module
from catfrob.lindist import (LF_LAWS, LinDistNatTrans, bihopf_counit, bihopf_unit, check_lf_axioms, check_lindist_nat,
                             compose_lindist, day_pastro_functor, forgetful_lindist, frobenius_lindist,
                             identity_lindist, identity_nat, inverse_recovery_report, perturb, scale_morphism,
                             strengths_from_bihopf, unit_object_pairs, unit_object_report)
from catfrob.wirthmuller import (check_frobenius_monoidal_functor, monad_as_frobenius_functor,
                                 right_adjoint_construct, wirthmuller_input_search)


def small_algebras(s):
    t = s.t
    return [a for a in (em_unit(t), free_algebra(t, 1), sign_module(t)) if a is not None]


@pytest.fixture(scope="module", params=["kz2", "sweedler"])
def bihopf(request):
    s = request.getfixturevalue(request.param)
    r = right_adjoint_construct(wirthmuller_input_search(s.t, 1), s.probes)
    return s, r, strengths_from_bihopf(r, s.probes)


def test_lf_law_catalogue():
    assert len(LF_LAWS) == 18 and len(set(LF_LAWS)) == 18
    assert LF_LAWS[0] == "LF1a" and LF_LAWS[-1] == "LF5d"


def test_bihopf_functor_satisfies_lf(bihopf):
    s, r, f = bihopf
    rep = check_lf_axioms(f, s.probes)
    assert set(LF_LAWS) <= set(rep.laws())
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("law", LF_LAWS)
def test_each_lf_law_on_kz2(kz2, law):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    assert check_lf_axioms(strengths_from_bihopf(r), kz2.probes).passed(law)


def test_unit_and_counit_are_linear(bihopf):
    s, r, f = bihopf
    unit = check_lindist_nat(bihopf_unit(r, f), small_algebras(s))
    counit = check_lindist_nat(bihopf_counit(r, f), s.probes)
    for rep in (unit, counit):
        assert {"LN1", "LN2", "LN3", "LN4"} <= set(rep.laws())
        assert rep.ok, rep.first_failure()


def test_inverse_formulas(bihopf):
    s, r, f = bihopf
    rep = inverse_recovery_report(f, r, s.probes, small_algebras(s))
    assert rep.ok, rep.first_failure()
    assert len(rep.laws()) == 8


def test_unit_object_dualities(bihopf):
    s, r, f = bihopf
    rep = unit_object_report(f)
    assert rep.ok, rep.first_failure()
    left, right = unit_object_pairs(f)
    assert check_dual_pair(left) and check_dual_pair(right)


def test_perturbed_costrength_fails(kz2):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    f = strengths_from_bihopf(r)
    rep = check_lf_axioms(perturb(f, "nu_L_l", 2), kz2.probes)
    assert not rep.passed("LF1a")


@pytest.mark.parametrize("component", ["nu_R_r", "nu_R_l", "nu_L_r", "nu_L_l"])
def test_every_perturbed_component_is_detected(kz2, component):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    f = strengths_from_bihopf(r)
    assert not check_lf_axioms(perturb(f, component, 2), kz2.probes).ok


def test_scaled_rho_breaks_linearity(kz2):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    f = strengths_from_bihopf(r)
    n = bihopf_counit(r, f)
    bad = LinDistNatTrans(n.source, n.target, lambda x: FINVECT.scale(n.rho(x), 2), n.lam)
    assert not check_lindist_nat(bad, kz2.probes).ok


def test_identity_functor(kz2):
    for cat, probes in ((FINVECT, [0, 1, 2]), (FINSET, [0, 1, 2])):
        f = identity_lindist(cat)
        assert check_lf_axioms(f, probes).ok
        assert check_lindist_nat(identity_nat(f), probes).ok


def test_forgetful_functor(kz2):
    f = forgetful_lindist(kz2.adj)
    assert check_lf_axioms(f, small_algebras(kz2)).ok


def test_composition_with_identity_is_neutral(kz2):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    f = strengths_from_bihopf(r)
    g = compose_lindist(identity_lindist(FINVECT), f)
    d = f.tgt
    for x in kz2.probes:
        for y in kz2.probes:
            assert d.equal(g.nu_L_l(x, y), f.nu_L_l(x, y))
            assert d.equal(g.nu_R_r(x, y), f.nu_R_r(x, y))
    assert check_lf_axioms(g, kz2.probes).ok


def test_composite_with_forgetful_is_linear(kz2):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    f = strengths_from_bihopf(r)
    assert check_lf_axioms(compose_lindist(f, forgetful_lindist(kz2.adj)), kz2.probes).ok


def test_frobenius_monoidal_functor_is_linear(kz2):
    r = right_adjoint_construct(wirthmuller_input_search(kz2.t, 1), kz2.probes)
    assert check_lf_axioms(frobenius_lindist(monad_as_frobenius_functor(r)), kz2.probes).ok


def test_tensoring_with_a_frobenius_algebra():
    fm = day_pastro_functor(nilpotent_frobenius_ungraded())
    probes = probe_objects(FINVECT, 0, 3)
    assert check_frobenius_monoidal_functor(fm, probes).ok
    assert check_lf_axioms(frobenius_lindist(fm), probes).ok


def test_scale_morphism_on_algebra_maps(kz2):
    d = kz2.adj.upper
    i = d.id(free_algebra(kz2.t, 1))
    assert scale_morphism(d, i, 3).underlying.mat == FINVECT.scale(FINVECT.id(2), 3).mat
