import io
import json
import subprocess
import sys

import pytest

from palinseq import oracle
from palinseq.cli import EXIT_CAP, EXIT_OK, EXIT_THEORY, EXIT_USAGE, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_next_json():
    code, out, _ = invoke("next", "17371", "--format", "json")
    assert code == EXIT_OK
    assert out == '{"input": "17371", "next": "17471"}\n'


def test_global_flags_before_subcommand():
    assert invoke("--format", "json", "next", "17371")[1] == invoke("next", "17371", "--format", "json")[1]


def test_ap_scan_text():
    code, out, _ = invoke("ap", "scan", "1", "1")
    assert code == EXIT_OK
    assert "failing_index: 9" in out
    assert "failing_term: 10" in out
    assert "cap: 1000" in out


def test_density_json():
    code, out, _ = invoke("density", "3", "11", "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["exact_count"] == "8"
    assert obj["main_term"] == "90/11"
    assert obj["relative_deviation"] == "1/45"


def test_gaps_csv_columns():
    code, out, _ = invoke("gaps", "17000", "17500", "--format", "csv")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "lower,upper,gap,digits"
    assert "17371,17471,100,5" in lines


def test_big_values_are_strings():
    n = 10**40 + 7
    code, out, _ = invoke("next", str(n), "--format", "json")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert obj["next"] == str(10**40 + 10**20 + 1)
    assert all(isinstance(v, str) for v in obj.values())


@pytest.mark.parametrize(
    "argv",
    [
        ("next", "12x"),
        ("next", "-5"),
        ("gp", "ratfail", "8", "3"),
        ("gp", "ratfail", "8", "4/2"),
        ("prev", "1"),
        ("count-digits", "0"),
        ("bogus",),
        ("ap",),
        ("density", "99", "7"),
        ("gp", "scan", "3", "13", "--check-gcd"),
        ("ap", "longest", "12", "33"),
        ("next", "1", "--format", "xml"),
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = invoke(*argv)
    assert code == EXIT_USAGE
    assert err


def test_malformed_number_names_argument():
    _, _, err = invoke("ap", "scan", "1", "x9")
    assert "argument d" in err
    assert "x9" in err


def test_cap_exceeded_exit_2():
    code, out, _ = invoke("gp", "scan", "1", "11", "--cap", "5", "--format", "json")
    assert code == EXIT_CAP
    assert json.loads(out) == {"status": "cap_exceeded", "terms_checked": "5", "cap": "5"}
    assert invoke("ap", "scan", "1", "1", "--cap", "3")[0] == EXIT_CAP


def test_oracle_mismatch_exit_3(monkeypatch):
    monkeypatch.setattr(oracle, "oracle_next_palindrome", lambda n: n + 1)
    code, _, err = invoke("next", "17371", "--oracle")
    assert code == EXIT_THEORY
    assert "oracle" in err


def test_ap_scan_past_proven_cap_exit_3(monkeypatch):
    from palinseq import ap_analysis

    monkeypatch.setattr(ap_analysis, "is_palindrome", lambda n: True)
    assert invoke("ap", "scan", "1", "1")[0] == EXIT_THEORY


def test_oracle_bound_is_usage_error():
    code, _, err = invoke("next", str(10**9), "--oracle")
    assert code == EXIT_USAGE


def test_search_seed_flag():
    a = invoke("ap", "search", "300", "3", "--seed", "4", "--format", "json")
    b = invoke("ap", "search", "300", "3", "--format", "json")
    assert a == b


def test_empty_gaps_csv():
    code, out, _ = invoke("gaps", "122", "131", "--format", "csv")
    assert code == EXIT_OK
    assert out == ""


def test_help_exits_zero():
    assert invoke("--help")[0] == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "palinseq", "next", "3459543", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '{"input": "3459543", "next": "3460643"}\n'
