from fractions import Fraction

import pytest

from catfrob.algebras import (REFUTED, ComonoidData, DualPairData, FrobeniusConstraints, FrobeniusData,
                              check_dual_pair, check_frobenius_monoid, check_hopf, dual_pair_adjunction_report,
                              frobenius_dual_pair, frobenius_structure_search, graded_nilpotent_algebra,
                              group_algebra, nilpotent_frobenius_ungraded, sweedler_algebra, trivial_frobenius)
from catfrob.categories import FINSET, FINVECT, GRVECT, ContractViolation, GradedSpace, LinMor, probe_objects
from catfrob.exact import RationalMatrix

M = RationalMatrix.from_rows

SHIPPED = [group_algebra(1), group_algebra(2), group_algebra(3), sweedler_algebra(), graded_nilpotent_algebra(),
           group_algebra(2, GRVECT), group_algebra(3, FINSET)]


@pytest.mark.parametrize("h", SHIPPED, ids=lambda h: f"{h.name}-{h.cat.name}")
def test_shipped_algebras_are_hopf(h):
    rep = check_hopf(h)
    assert rep.ok, rep.first_failure()


@pytest.mark.parametrize("h", SHIPPED, ids=lambda h: f"{h.name}-{h.cat.name}")
def test_antipode_convolution_equals_unit_counit(h):
    c, a = h.cat, h.carrier
    lhs = c.compose(h.m, c.tensor(h.s, c.id(a)), h.d)
    assert c.equal(lhs, c.compose(h.u, h.e))


def test_group_algebra_constants():
    h = group_algebra(2)
    assert h.carrier == 2
    assert h.d.mat.to_lists() == [[1, 0], [0, 0], [0, 0], [0, 1]]
    assert h.s.mat == RationalMatrix.identity(2)
    assert group_algebra(1).m.mat == M([[1]])


def test_graded_antipode_negates_x():
    h = graded_nilpotent_algebra()
    assert h.carrier == GradedSpace.of(1, 1)
    assert h.s.mat == M([[1, 0], [0, -1]])


def test_sweedler_with_identity_antipode_fails():
    h = sweedler_algebra()
    bad = h.replace(s=FINVECT.id(4))
    rep = check_hopf(bad)
    assert not rep.passed("antipode.left")
    assert rep.first_failure().law == "antipode.left"
    assert rep.first_failure().witness["diff"]["col"] == 2


def test_shape_mismatch_is_a_contract_violation():
    h = group_algebra(2)
    with pytest.raises(ContractViolation):
        check_hopf(h.replace(s=FINVECT.id(3)))


def test_dual_pair_examples():
    one = FINVECT.id(1)
    assert check_dual_pair(DualPairData(FINVECT, 1, 1, one, one))
    ev = LinMor(4, 1, M([[1, 0, 0, 1]]))
    coev = LinMor(1, 4, M([[1], [0], [0], [1]]))
    assert check_dual_pair(DualPairData(FINVECT, 2, 2, ev, coev))
    assert not check_dual_pair(DualPairData(FINVECT, 2, 2, ev, FINVECT.scale(coev, 2)))


def test_dual_pair_induces_adjunction():
    ev = LinMor(4, 1, M([[1, 0, 0, 1]]))
    coev = LinMor(1, 4, M([[1], [0], [0], [1]]))
    assert dual_pair_adjunction_report(DualPairData(FINVECT, 2, 2, ev, coev), probe_objects(FINVECT, 0, 3)).ok


def test_frobenius_examples():
    assert check_frobenius_monoid(trivial_frobenius()).ok
    assert check_frobenius_monoid(nilpotent_frobenius_ungraded()).ok
    h = group_algebra(2)
    rep = check_frobenius_monoid(FrobeniusData(h.comonoid, h.u, h.m))
    assert not rep.passed("frobenius.left") or not rep.passed("frobenius.right")


def test_frobenius_monoid_is_self_dual():
    assert check_dual_pair(frobenius_dual_pair(nilpotent_frobenius_ungraded()))


def test_graded_frobenius_rejects_degree_violations_first():
    f = nilpotent_frobenius_ungraded()
    a = GradedSpace.of(1, 1)
    com = ComonoidData(GRVECT, a, LinMor(GRVECT.tensor_obj(a, a), a, f.comonoid.d.mat).__class__(
        a, GRVECT.tensor_obj(a, a), f.comonoid.d.mat), LinMor(a, GRVECT.unit(), f.comonoid.e.mat))
    rep = check_frobenius_monoid(FrobeniusData(com, LinMor(GRVECT.unit(), a, f.u.mat),
                                               LinMor(GRVECT.tensor_obj(a, a), a, f.m.mat)))
    assert rep.laws() == ["degree"] and not rep.ok


def test_search_copy_comonoid_on_unit():
    one = FINVECT.id(1)
    res = frobenius_structure_search(ComonoidData(FINVECT, 1, one, one))
    assert res.outcome == "found"
    assert res.u.mat == M([[1]]) and res.m.mat == M([[1]])


def test_search_kz2_with_module_constraint_finds_integral():
    h = group_algebra(2)
    c = FINVECT

    # u must satisfy u e(a) = a u, i.e. be an integral
    def u_res(u):
        return c.sub(c.compose(u, h.e), c.compose(h.m, c.tensor(u, c.id(2))))

    res = frobenius_structure_search(h.comonoid, FrobeniusConstraints(u_residual=u_res))
    assert res.outcome == "found"
    assert res.u.mat == M([[Fraction(1, 2)], [Fraction(1, 2)]])
    assert check_frobenius_monoid(res.frobenius).ok


@pytest.mark.parametrize("h", [group_algebra(1), group_algebra(2), group_algebra(3), sweedler_algebra()],
                         ids=lambda h: h.name)
def test_search_results_verify(h):
    res = frobenius_structure_search(h.comonoid)
    assert res.outcome == "found"
    assert check_frobenius_monoid(res.frobenius).ok
    assert c_eval(res) == 1


def c_eval(res):
    com = res.frobenius.comonoid
    return com.cat.compose(com.e, res.u).mat[0, 0]


def test_search_refutes_graded_nilpotent():
    res = frobenius_structure_search(graded_nilpotent_algebra().comonoid)
    assert res.outcome == REFUTED


def test_search_on_finite_sets_is_exhaustive():
    res = frobenius_structure_search(group_algebra(2, FINSET).comonoid)
    assert res.outcome == REFUTED
    assert res.candidates == 2 * 16
    assert frobenius_structure_search(trivial_frobenius(FINSET).comonoid).outcome == "found"


def test_search_budget_is_reported_as_undecided():
    res = frobenius_structure_search(sweedler_algebra().comonoid, max_dim=3)
    assert res.outcome == "undecided"
