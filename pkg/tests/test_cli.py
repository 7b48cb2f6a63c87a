"""CLI contract: commands, exit codes, report formats, cache file handling."""

from __future__ import annotations

import json
import re
import subprocess
import sys


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "bepoly", *args], capture_output=True, text=True
    )


def test_compute_values():
    assert run_cli("compute", "bernoulli-number", "12").stdout.strip() == "-691/2730"
    assert run_cli("compute", "bernoulli-poly", "2").stdout.strip() == "x^2 - x + 1/6"
    assert run_cli("compute", "harmonic", "4").stdout.strip() == "25/12"
    assert run_cli("compute", "euler-poly", "2").stdout.strip() == "x^2 - x"
    assert run_cli("compute", "bbar", "4").stdout.strip() == "7/240"


def test_compute_usage_errors():
    assert run_cli("compute", "bernoulli-number", "-3").returncode == 2
    assert run_cli("compute", "bernoulli-number", "twelve").returncode == 2
    assert run_cli("compute", "nonsense", "3").returncode == 2


def test_verify_one_line_per_instance():
    proc = run_cli("verify", "--id", "1.1", "--n", "4..10")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 7
    assert all(line.startswith("ok") for line in lines)


def test_verify_json_schema():
    proc = run_cli("verify", "--id", "1.1", "--n", "4..6", "--json")
    assert proc.returncode == 0
    rows = [json.loads(line) for line in proc.stdout.strip().splitlines()]
    assert len(rows) == 3
    for row in rows:
        assert set(row) >= {"id", "n", "p", "q", "holds", "residual", "elapsed_ms"}
        assert row["id"] == "1.1"
        assert row["holds"] is True
        assert row["residual"] == "0"
        assert isinstance(row["elapsed_ms"], (int, float))


def test_verify_negative_control_fails_with_exit_1():
    proc = run_cli("verify", "--id", "2.1-as-printed", "--n", "2", "--json")
    assert proc.returncode == 1
    row = json.loads(proc.stdout.strip())
    assert row["holds"] is False
    assert row["residual"] == "x*y - 1/2*x"


def test_text_and_json_modes_agree():
    text = run_cli("verify", "--id", "2.1-as-printed", "--n", "1..3")
    as_json = run_cli("verify", "--id", "2.1-as-printed", "--n", "1..3", "--json")
    rows = [json.loads(line) for line in as_json.stdout.strip().splitlines()]
    lines = text.stdout.strip().splitlines()
    assert len(rows) == len(lines) == 3
    for row, line in zip(rows, lines):
        assert line.startswith("ok") == row["holds"]
        if not row["holds"]:
            assert row["residual"] in line


def test_verify_unknown_id_is_usage_error_listing_catalog():
    proc = run_cli("verify", "--id", "9.9", "--n", "4")
    assert proc.returncode == 2
    assert "1.1" in proc.stderr and "ds" in proc.stderr


def test_verify_bad_range_is_usage_error():
    assert run_cli("verify", "--id", "1.1", "--n", "10..4").returncode == 2
    assert run_cli("verify", "--id", "1.1", "--n", "4..x").returncode == 2


def test_verify_with_parameter_ranges():
    proc = run_cli("verify", "--id", "3.1", "--n", "2..4", "--p", "0..1",
                   "--q", "1", "--json")
    assert proc.returncode == 0
    rows = [json.loads(line) for line in proc.stdout.strip().splitlines()]
    assert len(rows) == 6
    assert {(r["n"], r["p"], r["q"]) for r in rows} == {
        (n, p, 1) for n in (2, 3, 4) for p in (0, 1)
    }


def test_verify_all_exit_codes():
    assert run_cli("verify-all", "--n-max", "4").returncode == 0
    assert run_cli("verify-all", "--n-max", "4", "--id", "2.1-as-printed").returncode == 1


def test_cache_round_trip(tmp_path):
    path = tmp_path / "bernoulli.cache"
    proc = run_cli("cache", "save", "--cache", str(path), "--n-max", "50")
    assert proc.returncode == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "bepoly-bernoulli-cache v1"
    assert len(lines) == 52  # header + 51 entries
    assert lines[1] == "0\t1/1"
    assert lines[13] == "12\t-691/2730"
    proc = run_cli("cache", "load", "--cache", str(path))
    assert proc.returncode == 0
    assert "highest cached index: 50" in proc.stdout
    proc = run_cli("cache", "info", "--cache", str(path))
    assert proc.returncode == 0
    assert "highest cached index: 50" in proc.stdout


def test_cache_load_rejects_tampered_entry(tmp_path):
    path = tmp_path / "bernoulli.cache"
    run_cli("cache", "save", "--cache", str(path), "--n-max", "20")
    lines = path.read_text().splitlines()
    lines[13] = "12\t-691/2731"
    path.write_text("\n".join(lines) + "\n")
    proc = run_cli("cache", "load", "--cache", str(path))
    assert proc.returncode == 1
    assert "12" in proc.stderr


def test_cache_load_rejects_bad_header(tmp_path):
    path = tmp_path / "bernoulli.cache"
    path.write_text("something else\n0\t1/1\n")
    proc = run_cli("cache", "load", "--cache", str(path))
    assert proc.returncode == 1
    assert "header" in proc.stderr


def test_verify_reads_and_writes_cache(tmp_path):
    path = tmp_path / "b.cache"
    proc = run_cli("verify", "--id", "1.1", "--n", "4..8", "--cache", str(path))
    assert proc.returncode == 0
    assert path.read_text().splitlines()[0] == "bepoly-bernoulli-cache v1"
    proc = run_cli("verify", "--id", "1.1", "--n", "4..8", "--cache", str(path))
    assert proc.returncode == 0


def test_bench_structure_and_determinism():
    first = run_cli("bench", "--n-max", "30")
    second = run_cli("bench", "--n-max", "30")
    assert first.returncode == second.returncode == 0

    def stable_rows(proc: subprocess.CompletedProcess) -> list[str]:
        return [
            re.sub(r"\(\d+(?:\.\d+)? ms\)$", "", line).strip()
            for line in proc.stdout.strip().splitlines()
        ]

    rows_a, rows_b = stable_rows(first), stable_rows(second)
    assert len(rows_a) == 3
    assert rows_a == rows_b


def test_bench_minimal_n():
    proc = run_cli("bench", "--n-max", "1")
    assert proc.returncode == 0
    assert len(proc.stdout.strip().splitlines()) == 3
