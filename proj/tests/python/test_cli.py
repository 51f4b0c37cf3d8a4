"""Contract tests for the betasum command line tool.

The binary path arrives in the BETASUM_CLI environment variable.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("BETASUM_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="BETASUM_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=False, timeout=600)


def test_exit_code_pass():
    proc = run("verify", "rockett", "--n-max", "10")
    assert proc.returncode == 0
    assert proc.stdout.count(b"pass") == 11


def test_exit_code_strict_paper():
    relaxed = run("verify", "even-binom", "--n-max", "0")
    assert relaxed.returncode == 0
    strict = run("verify", "even-binom", "--n-max", "0", "--strict-paper")
    assert strict.returncode == 1


def test_exit_code_usage_errors():
    unknown = run("verify", "no-such-identity")
    assert unknown.returncode == 2
    assert b"rockett" in unknown.stderr  # the catalog listing accompanies the error

    no_subcommand = run()
    assert no_subcommand.returncode == 2

    bad_flag = run("verify", "rockett", "--no-such-flag")
    assert bad_flag.returncode == 2

    bad_format = run("verify", "rockett", "--format", "xml")
    assert bad_format.returncode == 2

    unrunnable = run("verify", "second-corollary-alt")
    assert unrunnable.returncode == 2
    assert b"unverifiable" in unrunnable.stderr


def test_json_schema_and_misprint_reporting():
    proc = run("verify", "even-binom", "--n-max", "0", "--format", "json")
    assert proc.returncode == 0
    rows = json.loads(proc.stdout)
    assert {r["variant"] for r in rows} == {"paper-form", "corrected-form"}
    for row in rows:
        assert set(row) == {"identity", "variant", "params", "lhs", "rhs", "verdict", "note"}
    by_variant = {r["variant"]: r for r in rows}
    assert by_variant["corrected-form"]["verdict"] == "pass"
    assert by_variant["paper-form"]["verdict"] == "fail"
    assert by_variant["paper-form"]["lhs"] == "1"
    assert by_variant["paper-form"]["rhs"] == "1/2"
    assert "documented misprint" in by_variant["paper-form"]["note"]


def test_reports_are_byte_identical(tmp_path):
    args = ("verify", "rockett", "general-ab", "--n-max", "8", "--seed", "5")
    for fmt in ("text", "json", "csv"):
        first = run(*args, "--format", fmt)
        second = run(*args, "--format", fmt)
        assert first.returncode == 0 and second.returncode == 0
        assert first.stdout == second.stdout

    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert run(*args, "--format", "csv", "--out", str(out1)).returncode == 0
    assert run(*args, "--format", "csv", "--out", str(out2)).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert out1.read_bytes().startswith(b"identity,variant,params,lhs,rhs,verdict,note\n")


def test_list_exposes_misprint_ledger():
    proc = run("list")
    assert proc.returncode == 0
    text = proc.stdout.decode()
    for name in ("rockett", "even-binom", "inv-binom-pow", "second-corollary-alt", "sin-series"):
        assert name in text
    assert "documented misprint" in text
    assert "unverifiable as printed" in text

    as_json = run("list", "--format", "json")
    entries = json.loads(as_json.stdout)
    kinds = {e["kind"] for e in entries}
    assert kinds == {"identity", "method", "numeric", "unverifiable"}


def test_seed_changes_randomized_grids():
    base = run("verify", "general-ab", "--n-max", "8", "--seed", "1", "--format", "csv")
    other = run("verify", "general-ab", "--n-max", "8", "--seed", "2", "--format", "csv")
    assert base.returncode == 0 and other.returncode == 0
    assert base.stdout != other.stdout


def test_method_check_instances_flag():
    proc = run("method-check", "--instances", "2", "--n-max", "2", "--m-max", "1", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.decode().strip().splitlines()
    assert sum(1 for line in lines if line.startswith("theorem1,")) == 2
