import io
import json
import subprocess
import sys

import pytest

from pfaffkit.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def value_line(text, label):
    return next(line.split(": ", 1)[1] for line in text.splitlines() if line.startswith(label + ":"))


def test_pf_recurrence():
    code, out, _ = run("pf", "--k", "5", "--alpha", "-1", "--b", "2", "--method", "recurrence")
    assert code == 0
    assert value_line(out, "pfaffian") == "70"


def test_pf_default_method():
    code, out, _ = run("pf", "--k", "1", "--alpha", "-1", "--b", "1")
    assert code == 0 and value_line(out, "pfaffian") == "1"


def test_pf_oracle_json():
    code, out, _ = run("pf", "--k", "4", "--alpha", "-2", "--b", "1", "--method", "oracle",
                       "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["value"] == "11"
    assert payload["command"] == "pf" and payload["method"] == "oracle"
    assert payload["params"] == {"k": 4, "alpha": "-2", "b": "1"}
    assert isinstance(payload["elapsed_ns"], int)


def test_pf_with_g():
    code, out, _ = run("pf", "--k", "1", "--alpha", "3", "--b", "5", "--g", "--format", "json")
    assert json.loads(out)["value_g"] == "-5"


def test_det_methods():
    cases = [
        (("--k", "4", "--alpha", "-1", "--b", "1", "--method", "closed"), "25"),
        (("--k", "2", "--alpha", "0", "--b", "3", "--method", "blockdiag"), "81"),
        (("--k", "3", "--alpha", "-1", "--b", "1", "--method", "pf-squared"), "9"),
        (("--k", "3", "--alpha", "-1", "--b", "1", "--method", "oracle"), "9"),
    ]
    for argv, want in cases:
        code, out, _ = run("det", *argv)
        assert code == 0
        assert value_line(out, "determinant") == want


def test_negative_fraction_and_alias():
    code, out, _ = run("det", "--k", "3", "--a-squared", "-1/2", "--b", "3/2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["params"]["alpha"] == "-1/2"
    code2, out2, _ = run("det", "--k", "3", "--alpha=-1/2", "--b", "3/2", "--format", "json")
    assert json.loads(out2)["value"] == payload["value"]
    assert "/" in payload["value"]


def test_dump_json_matrix():
    code, out, _ = run("pf", "--k", "1", "--alpha", "-1", "--b", "2", "--dump", "--format", "json")
    assert json.loads(out)["matrix"] == [["0", "2"], ["-2", "0"]]


def test_bad_rational_is_usage_error():
    code, _, err = run("pf", "--k", "2", "--alpha", "1.5", "--b", "1")
    assert code == 2


def test_oracle_cap_exit_code(monkeypatch):
    code, _, err = run("pf", "--k", "9", "--alpha", "-1", "--b", "1", "--method", "oracle")
    assert code == 3 and "cap" in err
    monkeypatch.setenv("PFAFFKIT_ORACLE_CAP", "4")
    code, _, _ = run("det", "--k", "3", "--alpha", "-1", "--b", "1", "--method", "oracle")
    assert code == 3


def test_table_fibonacci_matches_paper():
    code, out, _ = run("table", "--family", "fibonacci", "--kmax", "8", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["pf"] for r in rows] == ["1", "-2", "-3", "5", "8", "-13", "-21", "34"]
    assert all(r["pf_match"] and r["det_match"] for r in rows)


def test_table_pell_csv():
    code, out, _ = run("table", "--family", "pell", "--kmax", "3")
    lines = out.split("\n")
    assert code == 0
    assert lines[0] == "k,pf,expected_pf,det,expected_det,pf_match,det_match"
    assert lines[1:4] == ["1,2,2,4,4,true,true", "2,-5,-5,25,25,true,true",
                          "3,-12,-12,144,144,true,true"]
    assert lines[4] == ""
    assert "\r" not in out


def test_table_jacobsthal_single_row():
    code, out, _ = run("table", "--family", "jacobsthal", "--kmax", "1", "--format", "json")
    (row,) = json.loads(out)["rows"]
    assert row["pf"] == "1" and row["det"] == "1"


def test_table_unknown_family():
    code, _, _ = run("table", "--family", "lucas")
    assert code == 2


def test_verify_defaults_pass_and_deterministic():
    code, out, _ = run("verify", "--trials", "5", "--kmax-fast", "20", "--seed", "3")
    assert code == 0
    assert "FAIL" not in out
    code2, out2, _ = run("verify", "--trials", "5", "--kmax-fast", "20", "--seed", "3")
    assert out == out2


def test_verify_oracle_cap_usage_error():
    code, _, _ = run("verify", "--kmax-oracle", "9")
    assert code == 2


def test_verify_reports_failure(monkeypatch):
    import pfaffkit.cli as cli

    monkeypatch.setattr(cli.recurrence, "pf_fast", lambda k, p, which="F": 0)
    code, out, _ = run("verify", "--trials", "2", "--kmax-oracle", "2", "--kmax-fast", "3")
    assert code == 1
    assert "FAIL theorem-oracle" in out
    assert "counterexample" in out and "alpha=" in out


def test_bench_rows():
    code, out, _ = run("bench", "--kmax", "1000", "--step", "100", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    rec = [r for r in rows if r["method"] == "pf-recurrence"]
    assert [r["k"] for r in rec] == list(range(100, 1001, 100))
    digits = [r["digits"] for r in rec]
    assert digits == sorted(digits)
    assert not any(r["method"].endswith("oracle") for r in rows)
    for r in rows:
        assert set(r) == {"k", "method", "elapsed_ns", "digits"}


def test_bench_small_includes_oracles():
    code, out, _ = run("bench", "--kmax", "4")
    lines = out.strip().split("\n")
    assert lines[0] == "k,method,elapsed_ns,digits"
    oracle_ks = {int(l.split(",")[0]) for l in lines[1:] if "oracle" in l}
    assert oracle_ks == {1, 2, 3, 4}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pfaffkit", "pf", "--k", "5", "--alpha", "-1", "--b", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "pfaffian: 70" in proc.stdout
