import json
import subprocess
import sys

import pytest

from catfrob.cli import main
from catfrob.io import shipped_file, structure_constants_document
from catfrob.algebras import group_algebra
from catfrob.registry import MEASURED, PASS, SUITES, get_example, list_examples, refuted
from catfrob.reports import HOLDS, REFUTED
from catfrob.suite import SuiteReport, report_json, run_suite


def test_registry_is_stable():
    names = [e.name for e in list_examples()]
    assert names == ["trivial", "kz2", "kz3", "sweedler", "graded-nilpotent", "finset-z2"]
    assert get_example("kz2").expected["bihopf"] == PASS
    with pytest.raises(KeyError):
        get_example("nope")


@pytest.mark.parametrize("example,suite", [
    ("kz2", "hopf-axioms"), ("kz2", "monad"), ("kz3", "hopf-lemma"), ("trivial", "lindist"),
    ("graded-nilpotent", "bihopf"), ("finset-z2", "monad"),
])
def test_suites_pass_where_expected(example, suite):
    r = run_suite(example, suite)
    assert r.outcome == PASS and r.matched


def test_finset_bihopf_reports_cardinality_witness():
    r = run_suite("finset-z2", "bihopf")
    assert r.verdict_of("monad.hopf.left") == HOLDS
    assert r.verdict_of("monad.hopf.right") == HOLDS
    assert r.verdict_of("comonad.cofusion.left") == REFUTED
    entry = next(e for e in r.laws if e.law == "comonad.cofusion.left")
    assert entry.witness == {"pair": [2, 2], "dom": 16, "cod": 64}
    assert r.matched


def test_graded_pipeline_halts_with_refutation():
    r = run_suite("graded-nilpotent", "frobenius-pipeline")
    assert r.outcome == refuted("stage.frobenius-monoid")
    assert r.matched
    entry = next(e for e in r.laws if e.law == "stage.frobenius-monoid")
    assert entry.detail.startswith("not graded Frobenius")


def test_sweedler_right_variants_measurements():
    r = run_suite("sweedler", "right-variants")
    assert r.matched
    assert r.measurements["counits_equal"] is False
    assert r.measurements["counits_differ_at"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("kz2", "everything")


def test_report_matching_rules():
    r = SuiteReport("x", "s", 0, 3, expected=MEASURED)
    assert r.matched and r.outcome == PASS
    r = SuiteReport("x", "s", 0, 3, expected=refuted("law"))
    assert not r.matched
    doc = json.loads(report_json([r]))
    assert doc["all_matched"] is False and doc["reports"][0]["laws"] == []


def test_json_is_deterministic_and_omits_wall_time():
    a = report_json([run_suite("kz2", "monad", seed=5)])
    b = report_json([run_suite("kz2", "monad", seed=5)])
    assert a == b
    assert "wall_time" not in a
    assert json.loads(a)["reports"][0]["seed"] == 5


def test_cli_verify_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--example", "kz2", "--suite", "hopf-axioms,monad", "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert [r["suite"] for r in doc["reports"]] == ["hopf-axioms", "monad"]
    assert main(["verify", "--example", "nope"]) == 2
    assert main(["verify", "--example", "kz2", "--suite", "bogus"]) == 2
    assert main(["verify", "--example", "kz2", "--probe-budget", "0"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_json_to_stdout_is_pure_json(capsys):
    assert main(["verify", "--example", "finset-z2", "--suite", "bihopf", "--json", "-"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["all_matched"] is True


def test_cli_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("CATFROB_SEED", "7")
    assert main(["verify", "--example", "trivial", "--suite", "hopf-axioms", "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["reports"][0]["seed"] == 7


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "sweedler" in out and "refuted:stage.frobenius-monoid" in out


def test_cli_load(tmp_path, capsys):
    assert main(["load", str(shipped_file("sweedler.json")), "--check"]) == 0
    doc = structure_constants_document(group_algebra(2))
    doc["e"] = ["1", "0"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["load", str(bad)]) == 1
    assert "fails" in capsys.readouterr().err


def test_console_module_runs():
    res = subprocess.run([sys.executable, "-m", "catfrob", "list"], capture_output=True, text=True)
    assert res.returncode == 0 and "kz2" in res.stdout


def test_all_suites_are_registered():
    assert set(get_example("kz2").expected) == set(SUITES)


PAIRS = [(e.name, s) for e in list_examples() for s in e.expected]


@pytest.mark.parametrize("example,suite", PAIRS, ids=[f"{e}:{s}" for e, s in PAIRS])
def test_registered_expectation_matches(example, suite):
    r = run_suite(example, suite)
    assert r.matched, (r.outcome, r.expected)
