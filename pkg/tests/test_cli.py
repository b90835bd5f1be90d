#!/usr/bin/env python3
"""
Tests for the command-line front end, its output formats and exit codes
"""

import contextlib
import csv
import io
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli.app import main
from src.models.compat import CompatKind
from src.services.fixture_store import FixtureStore
from src.services.permanent import count_permutations
from src.services.verification import run_verification, verify_ratio, verify_table1
from src.utils.config import Config
from tests.runner import run_module


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def test_count_text_and_json():
    code, out = run("count", "--kind", "lcm", "--n", "12")
    assert code == 0
    assert "12192" in out
    code, out = run("count", "--kind", "div", "--n", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["results"][0]["count"] == "1"
    assert data["command"] == "count"


def test_count_anticoprime_matches_oracle():
    code, out = run("count", "--kind", "anticoprime", "--n", "8", "--format", "json")
    assert code == 0
    oracle = count_permutations(CompatKind.ANTICOPRIME, 8, engine="bruteforce").count
    assert json.loads(out)["results"][0]["count"] == str(oracle)


def test_table1_csv_keeps_exact_counts():
    code, out = run("table1", "--max-n", "12", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12
    assert rows[11]["lcm"] == "12192"
    assert rows[11]["div_root"] == "1.9965"
    assert '"12192"' in out


def test_table2_row():
    code, out = run("table2", "--b", "4")
    assert code == 0
    assert out.strip() == ".354987,1.4261,.354987,1.4261"


def test_upper_constants():
    code, out = run("upper", "--k", "30", "--format", "json")
    assert code == 0
    data = json.loads(out)["results"][0]
    assert abs(float(data["yseq_const"]) - 0.1554) < 5e-5
    assert abs(float(data["x0_analytic"]) - 1.9115) < 1e-3
    assert 2.6070 <= float(data["total_analytic"]) <= 2.6075


def test_construct_and_verify():
    code, out = run("construct", "--b", "2", "--n", "8", "--verify", "--format", "json")
    assert code == 0
    summary = json.loads(out)["results"][0]
    assert summary["blocks"] == 3
    assert summary["family_count"] == "8"
    assert summary["verified"] == 8


def test_anticoprime_command():
    code, out = run("anticoprime", "--max-n", "4", "--format", "json")
    assert code == 0
    assert [row["count"] for row in json.loads(out)["results"]] == ["1", "1", "1", "2"]


def test_exit_codes():
    assert run("count", "--n", "0")[0] == 2
    assert run("count", "--kind", "gcd", "--n", "3")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("table1", "--max-n", "30")[0] == 3
    assert run("table2", "--b", "480")[0] == 3
    assert run("table2", "--b", "360")[0] == 3
    assert run("table2", "--b", "5040", "--slow")[0] == 3
    assert run("count", "--kind", "div", "--n", str(Config.RYSER_CEILING + 1))[0] == 3
    assert run("construct", "--b", "12", "--n", "5")[0] == 2


def test_verification_pieces():
    store = FixtureStore()
    assert all(r.status == "PASS" for r in verify_table1(store, 10))
    tail = verify_table1(store, 13, min_n=13)
    assert [r.name for r in tail] == ["table1 div n=13", "table1 div root n=13", "table1 lcm n=13", "table1 lcm root n=13"]
    assert all(r.status == "PASS" for r in tail)
    assert all(r.status == "PASS" for r in verify_ratio(store))


def test_fixture_store():
    store = FixtureStore()
    assert len(store.table1_rows()) == 35
    assert store.expected_count(CompatKind.LCM, 33) is None
    assert store.expected_count(CompatKind.DIV, 35).count == 207587882368
    assert store.expected_count(CompatKind.ANTICOPRIME, 5) is None
    assert store.table2_row(480)["exp_c_alpha"] == "2.1335"


def test_fast_verification_passes():
    code, out = run("verify", "--format", "json")
    data = json.loads(out)
    failed = [f"{r['name']}: expected {r['expected']}, got {r['actual']}"
              for r in data["results"] if r["status"] == "FAIL"]
    assert failed == []
    assert code == 0
    skipped = [r["name"] for r in data["results"] if r["status"] == "SKIP"]
    assert skipped == ["table2 b=420", "table2 b=480"]
    assert data["parameters"] == {"slow": False, "nightly": False}


@pytest.mark.skipif(not Config.RUN_SLOW, reason="slow tier (set ARITHPERM_SLOW=1)")
def test_slow_verification_passes():
    results = run_verification(slow=True)
    assert all(r.status == "PASS" for r in results)
    again = run_verification(slow=True, threads=1)
    assert [r.actual for r in results] == [r.actual for r in again]


@pytest.mark.skipif(not Config.RUN_NIGHTLY, reason="nightly tier (set ARITHPERM_NIGHTLY=1)")
def test_nightly_count_rows():
    store = FixtureStore()
    results = verify_table1(store, Config.NIGHTLY_TIER_MAX_N, min_n=Config.SLOW_TIER_MAX_N + 1)
    assert all(r.status == "PASS" for r in results)
    assert {r.name for r in results} >= {"table1 div n=30", "table1 lcm n=30", "table1 lcm n=32"}


if __name__ == "__main__":
    sys.exit(0 if run_module(globals(), "command line") else 1)
