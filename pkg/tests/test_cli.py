import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args, env_extra=None):
    env = dict(os.environ, PYTHONPATH=SRC)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "qlie.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_gen_sigma_n2_lists_the_five_entries():
    proc = run_cli("gen", "sigma", "--n", "2")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["n"] == 2 and doc["legs"] == 2
    entries = {(tuple(e["out"]), tuple(e["in"])): e["coeff"] for e in doc["entries"]}
    assert entries == {
        ((1, 1), (1, 1)): "1",
        ((1, 2), (1, 2)): "b",
        ((1, 2), (2, 1)): "1 - b",
        ((2, 1), (1, 2)): "1",
        ((2, 2), (2, 2)): "1",
    }


def test_gen_constants_n3_has_four_entries():
    proc = run_cli("gen", "constants", "--n", "3")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert len(doc["entries"]) == 4
    by_key = {(e["upper"], tuple(e["lower"])): e["coeff"] for e in doc["entries"]}
    assert by_key == {
        (2, (2, 1)): "C",
        (2, (1, 2)): "-C",
        (3, (3, 1)): "C",
        (3, (1, 3)): "-C",
    }


def test_gen_rejects_n0():
    proc = run_cli("gen", "sigma", "--n", "0")
    assert proc.returncode == 2


def test_gen_rejects_zero_p():
    proc = run_cli("gen", "sigma-family", "--n", "2", "--p", "0")
    assert proc.returncode == 2


def test_gen_formats(tmp_path):
    out = tmp_path / "sigma.csv"
    proc = run_cli("gen", "sigma", "--n", "1", "--format", "csv", "--out", str(out))
    assert proc.returncode == 0 and proc.stdout == ""
    assert out.read_text() == "n,legs,out,in,coeff\n1,2,1 1,1 1,1\n"
    proc = run_cli("gen", "sigma", "--n", "1", "--format", "text")
    assert "[1,1;1,1] = 1" in proc.stdout


def test_gen_specialized_output():
    proc = run_cli("gen", "sigma", "--n", "2", "--beta", "1/2")
    doc = json.loads(proc.stdout)
    coeffs = {c["coeff"] for c in doc["entries"]}
    assert coeffs == {"1", "1/2"}


def test_verify_braid_passes():
    proc = run_cli("verify", "braid", "--n", "2")
    assert proc.returncode == 0
    reports = json.loads(proc.stdout)
    assert len(reports) == 1 and reports[0]["pass"] is True
    assert "braid: PASS" in proc.stderr


def test_verify_braid_corrupted_fails():
    proc = run_cli("verify", "braid", "--n", "2", "--corrupt", "(0,2;2,1)=2C")
    assert proc.returncode == 1
    reports = json.loads(proc.stdout)
    assert reports[0]["pass"] is False
    assert reports[0]["witnesses"]


def test_verify_qlie_specialized():
    proc = run_cli("verify", "qlie", "--n", "4", "--beta", "0", "--C", "1")
    assert proc.returncode == 0
    reports = json.loads(proc.stdout)
    assert reports[0]["symbolic"] == ["p"]


def test_verify_rtt_corrupted_constants():
    proc = run_cli(
        "verify", "rtt", "--n", "2", "--corrupt-constants", "(2;2,1)=2C"
    )
    assert proc.returncode == 1
    reports = json.loads(proc.stdout)
    assert reports[0]["suite"] == "rtt" and reports[0]["failures"] > 0


def test_verify_all_passes_and_is_deterministic():
    first = run_cli("verify", "all", "--n", "2")
    second = run_cli("verify", "all", "--n", "2")
    assert first.returncode == 0 and second.returncode == 0
    strip = lambda s: re.sub(r'"millis": \d+', '"millis": 0', s)
    assert strip(first.stdout) == strip(second.stdout)
    suites = [r["suite"] for r in json.loads(first.stdout)]
    assert suites == ["braid", "ybe", "cybe", "components", "ybfr", "qlie", "rtt"]


def test_verify_accepts_jobs_flag_and_env():
    direct = run_cli("verify", "all", "--n", "1", "--jobs", "2")
    via_env = run_cli("verify", "all", "--n", "1", env_extra={"QLIE_JOBS": "2"})
    assert direct.returncode == 0 and via_env.returncode == 0
    strip = lambda s: re.sub(r'"millis": \d+', '"millis": 0', s)
    assert strip(direct.stdout) == strip(via_env.stdout)


def test_verify_seed_flag():
    a = run_cli("verify", "rtt", "--n", "2", "--seed", "7")
    b = run_cli("verify", "rtt", "--n", "2", "--seed", "7")
    assert a.returncode == 0
    strip = lambda s: re.sub(r'"millis": \d+', '"millis": 0', s)
    assert strip(a.stdout) == strip(b.stdout)


def test_cross_check_passes():
    proc = run_cli("cross-check", "--n", "2")
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["suite"] == "cross-check" and doc["pass"] is True


def test_cross_check_flip_s_sign_fails_at_c_weighted_entry():
    proc = run_cli("cross-check", "--n", "2", "--flip-s-sign")
    assert proc.returncode == 1
    doc = json.loads(proc.stdout)
    assert doc["pass"] is False
    assert any("C" in w["lhs"] or "C" in w["rhs"] for w in doc["witnesses"])


def test_verify_hecke_is_not_in_all():
    proc = run_cli("verify", "all", "--n", "2")
    suites = [r["suite"] for r in json.loads(proc.stdout)]
    assert "hecke" not in suites
    proc = run_cli("verify", "hecke", "--n", "3")
    assert proc.returncode == 0


def test_dump_relations_golden_n1():
    proc = run_cli("dump-relations", "--n", "1")
    assert proc.returncode == 0
    lines = proc.stdout.strip().split("\n")
    assert lines[0] == "rtt 0 0 0 0 : 0"
    assert "rtt 1 1 0 1 : (1)*x1*f(1,1) + (-1)*f(1,1)*x1" in lines
    assert "bcc 4 1 1 1 : (1)*x1*f(1,1) + (-1)*f(1,1)*x1" in lines


def test_bad_flags_exit_2():
    assert run_cli("verify", "braid").returncode == 2  # --n missing
    assert run_cli("verify", "nosuch", "--n", "1").returncode == 2
    assert run_cli("verify", "braid", "--n", "1", "--beta", "x").returncode == 2
    assert run_cli("verify", "braid", "--n", "1", "--corrupt", "junk").returncode == 2
