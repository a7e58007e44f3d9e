import os
from pathlib import Path

import pytest

import defeasor

CORPUS = Path(os.environ.get("DEFEASOR_TEST_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))

CHAIN = "arg(A).\narg(B).\narg(C).\natt(B,A).\natt(C,B).\n"


def test_framework_semantics():
    f = defeasor.Framework.parse(CHAIN)
    assert f.args == ["A", "B", "C"]
    assert f.extensions("grounded") == [["A", "C"]]
    assert f.status("B") == "Overruled"
    assert len(f) == 3


def test_compile_and_floating():
    f = defeasor.Framework.compile((CORPUS / "brygt_floating" / "rulebase.rb").read_text())
    assert f.conclusion_status("likes_ice_skating", "preferred") == "Justified"
    assert f.conclusion_status("likes_ice_skating", "grounded") == "Defensible"
    assert f.floating("preferred") == ["likes_ice_skating"]
    assert "att(" in f.to_text()
    assert f.to_dot().startswith("digraph")


def test_horty_and_zombies():
    text = (CORPUS / "dixon_zombie" / "rulebase.rb").read_text()
    result = defeasor.horty(text)
    assert "has_gun" in result["conclusions"]
    reasons = {d["argument"]: d["reason"] for d in result["discarded"]}
    assert reasons["r_pacifist[r_quaker[quaker]]"] == "DeadSubargument"
    zombies = defeasor.Framework.compile(text).zombies("preferred")
    assert ("r_pacifist[r_quaker[quaker]]", "r_chicago[lives_in_chicago]") in zombies


def test_minimal_models():
    text = (CORPUS / "microsoft" / "theory.th").read_text()
    assert defeasor.holds_in_all_minimal(text, "ge_half_million")
    assert not defeasor.holds_in_all_minimal(text, "ge_one_million")
    assert len(defeasor.minimal_models(text)) == 2


def test_diff():
    report = defeasor.diff((CORPUS / "brygt_floating" / "rulebase.rb").read_text())
    row = next(r for r in report["rows"] if r["literal"] == "likes_ice_skating")
    assert row["preferred"] == "Justified" and row["floating"] and not row["horty"]


def test_corpus():
    ok, report = defeasor.run_corpus(CORPUS)
    assert ok
    assert report["summary"]["passed"] == 11


def test_errors():
    with pytest.raises(defeasor.ParseError, match="line 2"):
        defeasor.Framework.parse("arg(A).\natt(A,B).\n")
    with pytest.raises(defeasor.PriorityCycleError):
        defeasor.Framework.compile("fact a.\ndefeasible r1: a => b.\ndefeasible r2: a => c.\n"
                                   "prefer r1 > r2.\nprefer r2 > r1.\n")
    with pytest.raises(defeasor.InputError):
        defeasor.Framework.parse(CHAIN).extensions("ideal")
    assert issubclass(defeasor.InputError, defeasor.Error)
