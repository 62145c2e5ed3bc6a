import dataclasses
import io
import json
import os
import subprocess
import sys

import pytest

from germcalc import cli
from germcalc import multigerm as mg
from germcalc.verdict import Outcome, Verdict
from germcalc.cli import Session, budgets_from_env, main, repl, run_script

FAMILY_SCRIPT = """\
field real
stream I = templates [x_{2k+1}^2 + (x_{2k+2} - x_{2k+3})^2]
pointgerm I dims 1..3 --field real
"""


def run(text, session=None):
    out, err = io.StringIO(), io.StringIO()
    code = run_script(text, out, err, session)
    return code, [json.loads(x) for x in out.getvalue().splitlines()], err.getvalue()


def test_family_point_germ_script():
    code, reports, err = run(FAMILY_SCRIPT)
    assert code == 0 and len(reports) == 1
    r = reports[0]
    assert r["command"] == "pointgerm" and r["field"] == "real"
    assert r["result"]["outcome"] == "proved"
    assert r["result"]["witness"]["alpha"] == ["x_1^2 + x_2^2 - 2*x_2*x_3 + x_3^2", "x_3^2 + x_4^2 - 2*x_4*x_5 + x_5^2"]
    assert "pointgerm" in err


def test_radical_membership_script():
    code, reports, _ = run("let f = x_1; ideal I = [x_1^2]; radmem I f --field complex")
    assert code == 0 and reports[0]["result"]["outcome"] == "proved"
    assert reports[0]["field"] == "complex"


def test_empty_script():
    assert run("") == (0, [], "")
    assert run("# only a comment\n\n")[:2] == (0, [])


def test_repl_examples():
    code, reports, _ = run("point x0 {2: 5, 3: 5}\nlet g = x_1^2 + (x_2-x_3)^2\ninvertible g\ninvertible 1 + x_1")
    assert code == 0
    assert reports[0]["result"]["invertible"] is False
    assert reports[1]["result"]["invertible"] is True


def test_restrict_reports_missing_coordinates():
    code, reports, _ = run("point x0 {2: 5, 3: 5}\nlet g = x_1^2 + (x_2-x_3)^2\nrestrict g {1}")
    assert code == 1
    assert reports[-1]["error"]["type"] == "NotIndexedBy"
    assert reports[-1]["error"]["missing"] == [2, 3]


def test_restrict_and_extend():
    _, reports, _ = run("restrict x_1 + x_2*x_3 - x_2*x_3 {1}\nextend x_1 {1, 4}")
    assert reports[0]["result"] == {"germ": "x_1", "indexing_set": [1]}
    assert reports[1]["result"]["indexing_set"] == [1, 4]


def test_script_error_stops_execution():
    code, reports, err = run("member J x_1\nmember J x_2")
    assert code == 1 and len(reports) == 1
    assert reports[0]["error"]["type"] == "UndefinedName" and reports[0]["line"] == 1
    assert "line 1" in err


def test_duplicate_names():
    code, reports, _ = run("let f = x_1\nlet f = x_2")
    assert code == 1 and reports[0]["error"]["type"] == "DuplicateName"


def test_syntax_errors_are_reported():
    code, reports, _ = run("let f = x_1 +")
    assert code == 1 and "error" in reports[0]


def test_systems_script():
    script = """\
field complex
stream M = coordinates
system Z = zero M
system P = point 1..4
system Q = chain [[x_1], [x_1, x_2]]
precedes Z P
precedes P Z window 3
equiv Q Q
system A = sequence M tail x_{k+1} - x_{k+2}
system P5 = point 1..5
equiv A P5 window 4
system W = chain [[x_1], [x_1*x_2]] unchecked
"""
    code, reports, _ = run(script)
    assert code == 0
    assert [r["result"]["outcome"] for r in reports] == ["proved"] * 4


def test_antitone_failure_is_a_script_error():
    code, reports, _ = run("field complex\nsystem W = chain [[x_1], [x_1*x_2]]")
    assert code == 1 and reports[0]["error"]["type"] == "NotAntitone"


def test_field_override_materialises_per_field():
    script = "ideal I = [x_1^2 + x_2^2]\nradmem I x_1\nradmem I x_1 --field complex"
    code, reports, _ = run(script)
    assert code == 0
    assert reports[0]["result"]["outcome"] == "proved"
    assert reports[1]["result"]["outcome"] == "refuted"


def test_nullstellensatz_consistent_and_defect(monkeypatch):
    code, reports, _ = run("ideal I = [x_1^2 + (x_2 - x_3)^2]\nnullstellensatz I x_2")
    assert code == 0 and reports[0]["result"]["agreement"] == "consistent"

    real = mg.nullstellensatz_check

    def broken(I, f, budget=None):
        report = real(I, f, budget)
        flipped = Verdict(Outcome.REFUTED, report.radical_side.witness, {})
        return dataclasses.replace(report, radical_side=flipped)

    monkeypatch.setattr(mg, "nullstellensatz_check", broken)
    code, _, _ = run("field complex\nideal I = [x_1^2]\nnullstellensatz I x_1")
    assert code == 2


def test_budget_command_and_dump():
    code, reports, _ = run("budget enum=5 gb=100\nlet f = x_1\ndump")
    d = reports[0]["result"]
    assert d["budget"] == {"gb": 100, "enum": 5, "curve": 256}
    assert d["definitions"]["f"] == {"kind": "let", "definition": "x_1"}


def test_budgets_from_environment():
    assert budgets_from_env({"GERMCALC_BUDGETS": "enum=8, curve=3"}) == {"enum": 8, "curve": 3}
    assert budgets_from_env({}) == {}
    with pytest.raises(SystemExit):
        budgets_from_env({"GERMCALC_BUDGETS": "speed=9"})


def test_repl_history_replays_byte_identically(tmp_path):
    lines = "field complex\nideal I = [x_1*x_2]\nradmem I x_1\nbogus\nmember I x_1*x_2*x_3\n"
    out, hist = io.StringIO(), io.StringIO()
    code = repl(io.StringIO(lines), out, io.StringIO(), history=hist, prompt=False)
    assert code == 0  # errors are not fatal in the REPL
    # replaying the history as a script stops at the bad line, so compare up to it
    replay_out = io.StringIO()
    run_script(hist.getvalue(), replay_out, io.StringIO())
    repl_lines = out.getvalue().splitlines()
    script_lines = replay_out.getvalue().splitlines()
    assert script_lines == repl_lines[: len(script_lines)]
    good = "".join(l + "\n" for l in hist.getvalue().splitlines() if l != "bogus")
    out2 = io.StringIO()
    repl(io.StringIO(good), out2, io.StringIO(), prompt=False)
    out3 = io.StringIO()
    run_script(good, out3, io.StringIO())
    assert out2.getvalue() == out3.getvalue()


def _cli(*args, stdin=None, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "germcalc", *args], input=stdin, capture_output=True,
                          text=True, env=full_env, timeout=120)


def test_subprocess_run_and_verify(tmp_path):
    script = tmp_path / "s.gc"
    script.write_text(FAMILY_SCRIPT + "ideal J = [x_1*x_2]\nradmem J x_1 --field complex\n", encoding="utf-8")
    p = _cli("run", str(script))
    assert p.returncode == 0, p.stderr
    report = tmp_path / "out.jsonl"
    report.write_text(p.stdout, encoding="utf-8")
    v = _cli("verify-witness", str(report))
    assert v.returncode == 0, v.stdout
    statuses = [json.loads(x) for x in v.stdout.splitlines()]
    assert len(statuses) == 2 and all(s["valid"] for s in statuses)


def test_verify_witness_rejects_tampering(tmp_path):
    p = _cli("run", "-", stdin="ideal J = [x_1^2]\nradmem J x_1 --field complex\n")
    doc = json.loads(p.stdout)
    doc["result"]["witness"]["exponent"] = 0
    v = _cli("verify-witness", json.dumps(doc))
    assert v.returncode == 1 and json.loads(v.stdout)["valid"] is False


def test_budget_flags_and_environment_reach_the_session(tmp_path):
    p = _cli("run", "-", "--enum-budget", "7", stdin="dump\n", env={"GERMCALC_BUDGETS": "curve=9,enum=3"})
    budget = json.loads(p.stdout)["result"]["budget"]
    assert budget == {"gb": 10000, "enum": 7, "curve": 9}


def test_main_returns_exit_code(tmp_path, capsys):
    script = tmp_path / "bad.gc"
    script.write_text("nonsense here\n", encoding="utf-8")
    assert main(["run", str(script)]) == 1
    assert json.loads(capsys.readouterr().out)["error"]["type"] == "UnknownCommand"
