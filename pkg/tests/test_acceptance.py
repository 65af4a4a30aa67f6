"""Acceptance criteria 1 to 9, one test each.

Each criterion prints a single ``criterion N: PASS|FAIL`` line (shown in the
terminal summary under pytest, or directly when run as a script).
"""

import subprocess
import sys

import pytest

from catfrob.algebras import (REFUTED, check_frobenius_monoid, check_hopf, frobenius_structure_search,
                              graded_nilpotent_algebra, group_algebra, nilpotent_frobenius_ungraded, sweedler_algebra)
from catfrob.categories import FINSET, FINVECT, probe_objects
from catfrob.eilenberg_moore import check_hopf_lemma, em_adjunction, em_probe_algebras, em_unit, free_algebra, sign_module
from catfrob.lindist import (LF_LAWS, bihopf_counit, bihopf_unit, check_lf_axioms, check_lindist_nat,
                             inverse_recovery_report, strengths_from_bihopf)
from catfrob.monads import (cofusion_left, cofusion_verdict, descent_type_check, hom_comonad, induced_module_monad,
                            is_left_hopf, is_right_hopf, set_product_monad)
from catfrob.reports import HOLDS
from catfrob.wirthmuller import (check_frobenius_monoidal_functor, check_LC, check_right_adjoint, cohopf_identity,
                                 compare_right_adjoints, monad_as_frobenius_functor, right_adjoint_construct,
                                 right_adjoint_right_variant, wirthmuller_input_search)

RESULTS: dict[int, tuple[bool, str]] = {}

LEMMA_FAMILIES = ("h1l", "h1r", "h2l", "h2r", "h3l", "h4l", "h4r", "h5l", "h5r", "h6l", "h6r", "h8l", "h8r")


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(line(n))
    assert ok, detail


def line(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"


def setting(h, budget, alg_budget):
    probes = probe_objects(h.cat, 0, budget)
    t = induced_module_monad(h, probes)
    return probes, t, em_adjunction(t), em_probe_algebras(t, budget=alg_budget)


def small_algebras(t):
    return [a for a in (em_unit(t), free_algebra(t, 1), sign_module(t)) if a is not None]


def test_criterion_1_axiom_suites():
    algebras = [group_algebra(2), group_algebra(3), sweedler_algebra(), graded_nilpotent_algebra()]
    failed = [h.name for h in algebras if not check_hopf(h).ok]
    record(1, not failed and sweedler_algebra().carrier == 4,
           "kZ2, kZ3, Sweedler, graded k[x]/x^2" if not failed else f"failing: {failed}")


def test_criterion_2_hopf_operator_lemma():
    bad = []
    for h, alg_budget in ((group_algebra(2), 4), (sweedler_algebra(), 3)):
        probes, t, adj, algs = setting(h, 4, alg_budget)
        assert max(FINVECT.dim(x) for x in probes) <= 3
        rep = check_hopf_lemma(adj, probes, algs)
        missing = set(LEMMA_FAMILIES) - set(rep.laws())
        if missing or not rep.ok:
            bad.append((h.name, sorted(missing), rep.first_failure()))
    record(2, not bad, "h1..h6 and h8, both sides, on kZ2 and Sweedler at budget 4" if not bad else repr(bad))


@pytest.fixture(scope="module")
def kz2_bihopf():
    probes, t, adj, algs = setting(group_algebra(2), 3, 3)
    r = right_adjoint_construct(wirthmuller_input_search(t, 1), probes)
    return probes, t, algs, r, strengths_from_bihopf(r, probes)


def test_criterion_3_bihopf_gives_linearly_distributive_functor(kz2_bihopf):
    probes, t, algs, r, f = kz2_bihopf
    lf = check_lf_axioms(f, probes)
    unit = check_lindist_nat(bihopf_unit(r, f), algs)
    counit = check_lindist_nat(bihopf_counit(r, f), probes)
    ln = {"LN1", "LN2", "LN3", "LN4"}
    ok = (lf.ok and set(LF_LAWS) <= set(lf.laws()) and unit.ok and counit.ok
          and ln <= set(unit.laws()) and ln <= set(counit.laws()))
    record(3, ok, f"{len(LF_LAWS)} LF relations, LN1..LN4 for unit and counit on kZ2")


def test_criterion_4_inverse_formulas(kz2_bihopf):
    probes, t, algs, r, f = kz2_bihopf
    rep = inverse_recovery_report(f, r, probes, algs)
    s_probes, s_t, _, _ = setting(sweedler_algebra(), 3, 3)
    s_r = right_adjoint_construct(wirthmuller_input_search(s_t, 1), s_probes)
    s_rep = inverse_recovery_report(strengths_from_bihopf(s_r), s_r, s_probes, small_algebras(s_t))
    record(4, rep.ok and s_rep.ok and len(rep.laws()) == 8, "four operators, both composites, kZ2 and Sweedler")


def test_criterion_5_frobenius_pipeline_on_kz2(kz2_bihopf):
    probes, t, algs, r, f = kz2_bihopf
    lc = check_LC(r.w)
    descent = descent_type_check(t, probes)
    triangles = check_right_adjoint(r, probes, algs)
    cohopf = cohopf_identity(r, probes, algs)
    frob = check_frobenius_monoidal_functor(monad_as_frobenius_functor(r), probes)
    ok = (lc.ok and descent.status == HOLDS and triangles.passed("triangle.unit") and triangles.passed("triangle.counit")
          and cohopf.status == HOLDS and frob.passed("frobenius.eq1") and frob.passed("frobenius.eq2") and frob.ok)
    record(5, ok, "LC, descent, triangles, coHopf identity, eq1 and eq2")


def test_criterion_6_finite_set_counterexample():
    probes = probe_objects(FINSET, 0, 3)
    t = set_product_monad(2)
    hopf = is_left_hopf(t, probes).status == HOLDS and is_right_hopf(t, probes).status == HOLDS
    g = hom_comonad(2)
    op = cofusion_left(g, 2, 2)
    counts = (FINSET.size(op.dom), FINSET.size(op.cod))
    refuted = cofusion_verdict(g, [2], "left").status == REFUTED
    record(6, hopf and counts == (16, 64) and refuted, f"Hopf on probes, cofusion at (2, 2) is {counts[0]} -> {counts[1]}")


def test_criterion_7_graded_counterexample():
    res = frobenius_structure_search(graded_nilpotent_algebra().comonoid)
    ungraded = check_frobenius_monoid(nilpotent_frobenius_ungraded()).ok
    record(7, res.outcome == REFUTED and ungraded, f"graded search: {res.outcome}; ungraded Frobenius: {ungraded}")


def test_criterion_8_two_right_adjoints_on_sweedler():
    probes, t, adj, algs = setting(sweedler_algebra(), 3, 3)
    w = wirthmuller_input_search(t, 1)
    left = right_adjoint_construct(w, probes)
    right = right_adjoint_right_variant(w, probes)
    cmp = compare_right_adjoints(left, right, probes)
    ok = cmp["invertible"] and cmp["monoidal"].ok and not cmp["counits_equal"]
    record(8, ok, f"comparison invertible and monoidal, counits differ at {cmp['counits_differ_at']}")


def test_criterion_9_deterministic_cli(tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        cmd = [sys.executable, "-m", "catfrob", "verify", "--example", "finset-z2", "--suite", "all",
               "--seed", "3", "--json", str(path)]
        subprocess.run(cmd, check=True, capture_output=True)
        outs.append(path.read_bytes())
    record(9, outs[0] == outs[1] and len(outs[0]) > 0, f"{len(outs[0])} identical bytes")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
