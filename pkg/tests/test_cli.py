import csv
import json
import subprocess
import sys

import pytest

from h43bound.cli import main
from h43bound.graphs import from_graph6

REPORT_KEYS = {"tool-version", "schema-version", "command", "flags", "results", "timing"}


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_rho_prime(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, cap = run(capsys, "rho-prime", "--m", "18,20", "--out", str(out))
    assert code == 0
    assert "4.593888315670" in cap.out and "4.831170119854" in cap.out
    rep = json.loads(out.read_text())
    assert set(rep) == REPORT_KEYS
    assert rep["flags"]["m"] == [18, 20]
    assert abs(rep["results"][1]["rho_prime"] - 4.831170119854) < 1e-9


@pytest.mark.parametrize("argv", [["rho-prime", "--m", "7"], ["rho-prime", "--m", "x"],
                                  ["verify", "--suite", "nope"], ["family", "--name", "t", "--m", "9"],
                                  ["family", "--name", "dist", "--m", "14"], ["search", "--m", "15"],
                                  ["search", "--jobs", "0", "--m", "18"], []])
def test_usage_errors_exit_2(capsys, argv):
    code, cap = run(capsys, *argv)
    assert code == 2


def test_rho_prime_odd_message(capsys):
    code, cap = run(capsys, "rho-prime", "--m", "7")
    assert "m must be even" in cap.err


@pytest.mark.parametrize("suite", ["charpoly", "decomp", "thresholds"])
def test_verify_passing_suites(capsys, tmp_path, suite):
    out, cs = tmp_path / "v.json", tmp_path / "v.csv"
    code, cap = run(capsys, "verify", "--suite", suite, "--m-max", "60", "--out", str(out), "--csv", str(cs))
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["command"] == "verify" and rep["flags"]["suite"] == suite
    with open(cs) as fh:
        rows = list(csv.DictReader(fh))
    assert [r["check_id"] for r in rows] == [r["check_id"] for r in rep["results"]]


def test_thresholds_report_boundary_label(capsys):
    code, cap = run(capsys, "verify", "--suite", "thresholds", "--m-max", "40", "-v")
    assert "expected-fail-below-24" in cap.out


def test_appendix_exits_1_on_misprints(capsys):
    code, cap = run(capsys, "verify", "--suite", "appendix", "--m-max", "40")
    assert code == 1
    assert "appendix.closed-at18.R_mix(L)" in cap.out


def test_verify_rejects_small_m_max(capsys):
    assert run(capsys, "verify", "--suite", "thresholds", "--m-max", "20")[0] == 2


def test_search_writes_reports_and_dump(capsys, tmp_path):
    out, cs = tmp_path / "s.json", tmp_path / "s.csv"
    code, cap = run(capsys, "search", "--m", "18", "--out", str(out), "--csv", str(cs),
                    "--dump-graphs", str(tmp_path / "g6"))
    assert code == 0
    assert "4.314116352656" in cap.out
    rep = json.loads(out.read_text())
    assert set(rep) == REPORT_KEYS
    (row,) = rep["results"]
    assert abs(row["best_rho"] - 4.314116352656) < 1e-6
    lines = (tmp_path / "g6" / "survivors-m18.g6").read_text().split()
    assert len(lines) == row["n_unique"]
    assert all(from_graph6(s).num_edges == 18 for s in lines)
    with open(cs) as fh:
        (crow,) = list(csv.DictReader(fh))
    assert float(crow["best_rho"]) == row["best_rho"]


def test_search_small_m(capsys):
    code, cap = run(capsys, "search", "--m", "14")
    assert code == 0 and "14" in cap.out


@pytest.mark.parametrize("name,m,verdict", [("t", 18, "below"), ("s-minus", 18, "equal-within-margin"),
                                            ("same", 18, "below"), ("t", 16, "above")])
def test_family_verdicts(capsys, name, m, verdict):
    code, cap = run(capsys, "family", "--name", name, "--m", str(m))
    assert code == 0
    assert cap.out.strip().endswith(f"verdict: {verdict}")


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "h43bound", "rho-prime", "--m", "22"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "5.056127739620" in res.stdout
