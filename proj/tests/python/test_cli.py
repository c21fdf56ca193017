import json
import os
import subprocess

import pytest

CLI = os.environ.get("RECOH_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="RECOH_CLI not set")


def run(*args, check=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_ensemble_csv_deterministic():
    args = ["ensemble", "--a", "1", "--K", "1", "--samples", "500", "--seed", "42"]
    first = run(*args)
    second = run(*args)
    assert first.stdout == second.stdout
    header, columns, row = first.stdout.strip().split("\n")
    assert header.startswith("# recoh")
    assert columns == "a,K,samples,seed,mc_mean,mc_stderr,closed_form,z_score"
    fields = row.split(",")
    assert fields[:4] == ["1", "1", "500", "42"]
    assert float(fields[6]) == pytest.approx(0.7853982, abs=1e-6)


def test_ensemble_json():
    proc = run("ensemble", "--a", "2", "--K", "2", "--samples", "500", "--seed", "1",
               "--format", "json")
    data = json.loads(proc.stdout)
    assert data["closed_form"] == pytest.approx(0.7608543, abs=1e-6)
    assert data["seed"] == 1
    assert data["version"]


def test_ensemble_bad_args():
    proc = run("ensemble", "--a", "7", "--K", "1", check=False)
    assert proc.returncode == 2
    proc = run("ensemble", check=False)
    assert proc.returncode == 2


def test_measures_roundtrip(tmp_path):
    state = tmp_path / "bell.json"
    s = 0.7071067811865476
    state.write_text(json.dumps({
        "dims": [2, 2, 1],
        "amplitudes": [[s, 0], [0, 0], [0, 0], [s, 0]],
    }))
    proc = run("measures", str(state))
    data = json.loads(proc.stdout)
    assert data["c1"] == pytest.approx(0.0, abs=1e-12)
    assert data["c2_subfid"] == pytest.approx(1.0, abs=1e-9)
    assert data["ca_tracenorm"] == pytest.approx(1.0, abs=1e-9)
    assert data["c3_newton"] is None


def test_measures_rejects_bad_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dims": [2, 2, 1], "amplitudes": [[0.5, 0]]}')
    proc = run("measures", str(bad), check=False)
    assert proc.returncode == 2
    assert "state file" in proc.stderr


def test_mzi_grid():
    proc = run("mzi", "--gamma-start", "0", "--gamma-end", "1", "--gamma-step", "0.5",
               "--phi", "0.3")
    lines = proc.stdout.strip().split("\n")
    assert lines[1] == "gamma,c1,c2"
    rows = [line.split(",") for line in lines[2:]]
    assert [r[0] for r in rows] == ["0", "0.5", "1"]
    assert float(rows[0][1]) == 0.0
    assert float(rows[0][2]) == pytest.approx(1.0, abs=1e-12)
    assert float(rows[2][1]) == pytest.approx(1.0, abs=1e-12)


def test_mzi_marker_in_environment():
    proc = run("mzi", "--gamma-start", "0", "--gamma-end", "0", "--gamma-step", "1",
               "--no-steering")
    row = proc.stdout.strip().split("\n")[-1].split(",")
    assert float(row[1]) == 0.0
    assert float(row[2]) == 0.0


def test_selftest_quick():
    proc = run("selftest", "--scale", "quick", "--seed", "7")
    assert proc.stdout.count("[PASS]") == 7
    assert "all criteria passed" in proc.stdout


def test_probe_c3():
    proc = run("probe-c3", "--samples", "5", "--variants", "5", "--K", "3", "--seed", "2")
    data = json.loads(proc.stdout)
    assert data["max_conditional_mismatch"] <= 1e-12
    assert data["max_c3_deviation"] <= 1e-9


def test_usage_error_exit_code():
    proc = run("no-such-command", check=False)
    assert proc.returncode == 2
