import json
import os
import subprocess

import pytest

CLI = os.environ.get("SPECNORM_CLI", "specnorm")


def run(*args, check_code=0):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr
    return proc


@pytest.fixture
def identity3(tmp_path):
    path = tmp_path / "i3.txt"
    path.write_text("3 3\n1 0 0\n0 1 0\n0 0 1\n")
    return path


@pytest.fixture
def cycle4(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n3 0\n")
    return path


def test_gen_tensor_one():
    assert run("gen", "tensor", "1").stdout == "2 2\n1 1\n1 0\n"


def test_gen_output_parses_back(tmp_path):
    path = tmp_path / "a3.txt"
    path.write_text(run("gen", "tensor", "3").stdout)
    out = json.loads(run("--json", "norms", path).stdout)
    assert out["rows"] == 8
    assert out["norm_profile"]["spectral"] == pytest.approx(4.2360679775, rel=1e-8)


def test_norms_identity(identity3):
    out = json.loads(run("--json", "norms", identity3).stdout)
    assert out["schema_version"] == 1
    assert out["log_convention"] == "ln"
    assert out["norm_profile"]["spectral"] == pytest.approx(1.0)
    assert out["norm_profile"]["height"] == pytest.approx(1.0)


def test_witness_delta_identity(identity3):
    out = json.loads(run("--json", "witness", "delta", identity3).stdout)
    assert out["ratio"] == pytest.approx(1.0)
    assert out["floor_thm"] == pytest.approx(0.0625)
    assert bin(int(out["xi_bits_hex"], 16)).count("1") == 1


def test_text_mode_lines(identity3):
    lines = run("witness", "delta", identity3).stdout.splitlines()
    assert "kind: delta_witness" in lines
    assert any(line.startswith("norm_profile.spectral: ") for line in lines)


def test_oracle_matches_witness_on_tensor(tmp_path):
    path = tmp_path / "a2.txt"
    path.write_text(run("gen", "tensor", "2").stdout)
    delta = json.loads(run("--json", "oracle", "delta", path).stdout)
    rho = json.loads(run("--json", "oracle", "rho", path).stdout)
    assert delta["ratio"] == pytest.approx(2.5)
    assert rho["ratio"] == pytest.approx(7 / 3)
    assert delta["provenance"] == "oracle"


def test_json_is_deterministic(identity3, cycle4):
    for args in (("witness", "rho", identity3), ("graph", "witness", cycle4), ("kneser-audit", 3)):
        first = run("--json", *args).stdout
        second = run("--json", *args).stdout
        assert first == second


def test_graph_commands(cycle4):
    audit = json.loads(run("--json", "graph", "audit", cycle4, "--samples", 200).stdout)
    assert audit["forward"]["violations"] == 0
    assert audit["rho"] == pytest.approx(2.0)
    witness = json.loads(run("--json", "graph", "witness", cycle4).stdout)
    assert witness["sigma"] == pytest.approx(2.0)


def test_tau_and_entropy():
    tau = json.loads(run("--json", "tau", 2).stdout)
    assert tau["values"] == ["4", "3", "1"]
    ent = json.loads(run("--json", "entropy", "--step", "0.01").stdout)
    assert ent["fmax"] == pytest.approx(0.9624236501, abs=1e-10)


def test_error_exit_codes(tmp_path, identity3):
    missing = run("norms", tmp_path / "missing.txt", check_code=1)
    err = json.loads(missing.stderr)
    assert err["error"] == "ParseError"

    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 2\n")
    assert json.loads(run("norms", bad, check_code=1).stderr)["error"] == "ParseError"

    zero = tmp_path / "zero.txt"
    zero.write_text("2 2\n0 0\n0 0\n")
    assert json.loads(run("witness", "delta", zero, check_code=1).stderr)["error"] == "ZeroMatrix"

    assert json.loads(run("oracle", "delta", identity3, "--cap", 2, check_code=1).stderr)["error"] == "CapExceeded"
    run("gen", "tensor", 11, check_code=1)
    run("no-such-command", check_code=1)

    loop = tmp_path / "loop.txt"
    loop.write_text("1 1\n")
    assert json.loads(run("graph", "audit", loop, check_code=1).stderr)["error"] == "LoopRejected"
