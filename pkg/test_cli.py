import json
from pathlib import Path

import pytest

from fibfull.engine import FiberFullEngine
from main import run
from src.fiber_full.errors import TheoremFalsification

INPUTS = Path(__file__).parent / "inputs"


def path(name):
    return str(INPUTS / name)


def run_cli(capsys, *argv):
    code = run([*argv, "--quiet"])
    return code, capsys.readouterr().out


def test_acm_and_ag(capsys):
    assert run_cli(capsys, "acm", path("twisted_cubic.ideal")) == (0, "ACM: true\n")
    assert run_cli(capsys, "ag", path("twisted_cubic.ideal")) == (0, "AG: false\n")
    assert run_cli(capsys, "ag", path("complete_intersection.ideal")) == (0, "AG: true\n")
    assert run_cli(capsys, "acm", path("skew_lines.ideal")) == (0, "ACM: false\n")


def test_compare(capsys):
    code, out = run_cli(capsys, "compare", path("skew_lines.ideal"), path("conic_point.ideal"),
                        "--window", "-4", "4")
    assert code == 0
    assert out == "DIFFERENT (first divergence: i=0, nu=-1)\n"
    code, out = run_cli(capsys, "compare", path("skew_lines.ideal"), path("double_line.ideal"),
                        "--window", "-4", "4")
    assert out == "SAME STRATUM\n"


def test_table_json_is_deterministic(capsys):
    argv = ("table", path("twisted_cubic.ideal"), "--json", "--window", "-3", "3")
    code, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    assert code == 0
    assert first == second
    report = json.loads(first)
    assert report["schema"] == 1
    assert report["command"] == "table"
    assert report["P_h"] == "3*m+1"
    assert report["h"][1] == [8, 5, 2, 0, 0, 0, 0]


def test_out_writes_file(capsys, tmp_path):
    target = tmp_path / "betti.json"
    code, out = run_cli(capsys, "betti", path("twisted_cubic.ideal"), "--json", "--out", str(target))
    assert code == 0
    assert out == ""
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["betti"] == {"0": {"2": 3}, "1": {"3": 2}}
    assert report["regularity"] == 1
    assert report["projective_dimension"] == 2


def test_lex_both_agree(capsys):
    code, out = run_cli(capsys, "lex", "--partition", "2,1", "--r", "3", "--both", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["agree"] is True
    assert report["ideal"] == ["x0", "x1^2", "x1*x2"]
    assert report["P_h"] == "m+2"
    assert report["closed_form"] == report["engine"]


def test_degenerate_with_square_free_check(capsys):
    code, out = run_cli(capsys, "degenerate", path("twisted_cubic.ideal"), "--check-squarefree",
                        "--window", "-3", "1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["order"] == "lex"
    assert report["squarefree"] is True
    assert report["equal"] is True
    assert report["initial_ideal"] == ["x0*x2", "x0*x3", "x1*x3"]


def test_family_commands(capsys):
    code, out = run_cli(capsys, "fiberfull-check", path("torsion.family"), "--window", "-1", "1")
    assert code == 0
    assert out.splitlines()[:2] == ["flat: false", "q = 1: false"]
    code, out = run_cli(capsys, "stratify", path("torsion.family"), "--window", "0", "2", "--json")
    assert code == 0
    assert [s["locus"] for s in json.loads(out)["strata"]] == ["t", "generic"]


def test_localcoh_reports_raw_hilbert_function(capsys):
    code, out = run_cli(capsys, "localcoh", path("twisted_cubic.ideal"), "--window", "0", "2", "--json")
    assert code == 0
    assert json.loads(out)["raw_hilbert"] == [1, 4, 7]


@pytest.mark.parametrize("argv", [
    ("acm", "missing.ideal"),
    ("table", "twisted_cubic.ideal", "--window", "3", "-3"),
    ("acm", "torsion.family"),
    ("stratify", "twisted_cubic.ideal"),
    ("lex", "--partition", "2,0", "--r", "3"),
    ("fiberfull-check", "torsion.family", "--q", "0"),
    ("table", "twisted_cubic.ideal", "--field", "F:7"),
    ("no-such-command",),
])
def test_input_errors_exit_with_one(capsys, argv):
    argv = [path(a) if a.endswith((".ideal", ".family")) else a for a in argv]
    assert run(argv + ["--quiet"]) == 1


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "fibfull" in capsys.readouterr().out


def test_failed_checks_exit_with_two(capsys, monkeypatch):
    def broken(self, path):
        raise TheoremFalsification("tables differ")

    monkeypatch.setattr(FiberFullEngine, "betti", broken)
    assert run(["betti", path("twisted_cubic.ideal"), "--quiet"]) == 2


def test_unexpected_errors_exit_with_two(capsys, monkeypatch):
    def broken(self, path):
        return 1 // 0

    monkeypatch.setattr(FiberFullEngine, "betti", broken)
    assert run(["betti", path("twisted_cubic.ideal"), "--quiet"]) == 2
    assert capsys.readouterr().out == ""
