import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from cauchy_gabor import GaborLattice, dual_window
from cauchy_gabor.cli import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_PARAM, main, seed_from_env

LN2_W = math.log(2) / (2 * math.pi)


def test_dual_csv(tmp_path):
    out = tmp_path / "g.csv"
    args = ["dual", "--alpha", "1", "--beta", "0.7", "--w", "0.2", "--tmin", "-10", "--tmax", "10", "--samples", "2048", "--out", str(out)]
    assert main(args) == EXIT_OK
    raw = out.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(raw.decode().splitlines()))
    assert rows[0] == ["t", "gamma_re", "gamma_im"]
    assert len(rows) == 2049
    t, re, im = (float(x) for x in rows[100])
    assert complex(re, im) == dual_window(t, GaborLattice(1.0, 0.7, 0.2))  # 17 digits round-trip exactly


def test_bounds_json(capsys):
    assert main(["bounds", "--alpha", "1", "--beta", "1", "--w", "0.110318"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert list(doc) == ["params", "checks", "results"]
    assert doc["params"]["w"] == 0.110318 and doc["params"]["seed"] == 42
    assert doc["results"]["A_lower"] == pytest.approx(4.38649, rel=1e-5)
    assert doc["results"]["B_upper"] == pytest.approx(157.914, rel=1e-5)
    assert doc["results"]["critical"] is not None


def test_bounds_exact_ln2(capsys):
    assert main(["bounds", "--alpha", "1", "--beta", "1", "--w", repr(LN2_W), "--format", "csv"]) == EXIT_OK
    rows = dict(csv.reader(capsys.readouterr().out.splitlines()[1:]))
    assert float(rows["A_lower"]) == pytest.approx(4 * math.pi**2 / 9, rel=1e-14)
    assert float(rows["B_critical"]) == pytest.approx(16 * math.pi**2, rel=1e-14)


@pytest.mark.parametrize("sub, header", [("zak", "t,zak_re,zak_im"), ("hhat", "xi,h_hat")])
def test_profiles_csv(sub, header, capsys):
    assert main([sub, "--alpha", "1", "--beta", "0.5", "--w", "0.1", "--samples", "11", "--tmin", "-1", "--tmax", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == header and len(lines) == 12


def test_json_tabular(capsys):
    assert main(["hhat", "--alpha", "1", "--beta", "0.5", "--w", "0.1", "--samples", "3", "--tmin", "0.1", "--tmax", "0.3", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["results"]["h_hat"][0] == pytest.approx(5.4626746404335488, rel=1e-14)


@pytest.mark.parametrize(
    "args",
    [
        ["bounds", "--alpha", "1", "--beta", "2", "--w", "0.1"],
        ["bounds", "--alpha", "-1", "--beta", "0.5", "--w", "0.1"],
        ["bounds", "--alpha", "0.01", "--beta", "1", "--w", "2"],
        ["dual", "--alpha", "1", "--beta", "0.5", "--w", "0.1", "--tmin", "3", "--tmax", "1"],
        ["dual", "--alpha", "1", "--beta", "0.5", "--w", "0.1", "--samples", "1"],
        ["verify", "--alpha", "1", "--beta", "0.5", "--w", "0.1", "--M", "0"],
    ],
)
def test_parameter_errors(args, capsys):
    assert main(args) == EXIT_PARAM
    assert "parameter error" in capsys.readouterr().err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--alpha", "abc", "--beta", "1", "--w", "0.1"])
    assert exc.value.code == EXIT_PARAM


def test_unwritable_output(tmp_path):
    target = tmp_path / "missing" / "g.csv"
    assert main(["dual", "--alpha", "1", "--beta", "0.7", "--w", "0.2", "--out", str(target)]) == EXIT_IO


def test_seed_env(monkeypatch, capsys):
    assert seed_from_env({}) == 42
    assert seed_from_env({"GABOR_SEED": "7"}) == 7
    monkeypatch.setenv("GABOR_SEED", "123")
    main(["bounds", "--alpha", "1", "--beta", "0.5", "--w", "0.1"])
    assert json.loads(capsys.readouterr().out)["params"]["seed"] == 123
    monkeypatch.setenv("GABOR_SEED", "x")
    assert main(["bounds", "--alpha", "1", "--beta", "0.5", "--w", "0.1"]) == EXIT_PARAM


def test_deterministic_bytes(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        main(["dual", "--alpha", "1", "--beta", "0.3", "--w", "0.1", "--samples", "500", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_module_entry_point(tmp_path):
    out = tmp_path / "b.json"
    proc = subprocess.run(
        [sys.executable, "-m", "cauchy_gabor", "bounds", "--alpha", "1", "--beta", "0.7", "--w", "0.2", "--out", str(out)],
        capture_output=True,
    )
    assert proc.returncode == EXIT_OK
    assert json.loads(out.read_text())["params"]["beta"] == 0.7


@pytest.fixture(scope="module")
def verify_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("verify") / "report.json"
    status = main(["verify", "--alpha", "1", "--beta", "0.3", "--w", "0.1", "--out", str(out)])
    return status, json.loads(out.read_text())


@pytest.mark.slow
def test_verify_report(verify_run):
    status, doc = verify_run
    assert list(doc) == ["params", "checks", "results"]
    names = [c["name"] for c in doc["checks"]]
    assert names == ["dual_vs_oracle", "S_route_equivalence", "S_gamma_equals_g", "reconstruction", "bound_sandwich", "gamma_hat_support"]
    for c in doc["checks"]:
        assert c["passed"] == (c["error"] <= c["tolerance"])
    all_ok = all(c["passed"] for c in doc["checks"])
    assert doc["results"]["passed"] == all_ok
    assert status == (EXIT_OK if all_ok else EXIT_FAILED)
    assert doc["params"]["alpha"] == 1.0 and doc["params"]["seed"] == 42
    assert doc["checks"][0]["passed"]


def test_verify_tolerance_override(capsys, monkeypatch):
    import cauchy_gabor.cli as cli

    seen = {}

    def fake(lat, M, N, seed, tolerances):
        seen.update(tolerances)
        from cauchy_gabor.oracle import Check, VerificationReport

        rep = VerificationReport({"alpha": lat.alpha})
        rep.add(Check("dual_vs_oracle", 0.5, tolerances["dual_vs_oracle"]))
        return rep

    monkeypatch.setattr(cli, "run_verification", fake)
    args = ["verify", "--alpha", "1", "--beta", "0.7", "--w", "0.2"]
    assert main(args + ["--tol-dual-vs-oracle", "1.0", "--tol-S-route-equivalence", "0.5"]) == EXIT_OK
    assert seen["dual_vs_oracle"] == 1.0 and seen["S_route_equivalence"] == 0.5
    assert main(args) == EXIT_FAILED
    assert "FAIL dual_vs_oracle" in capsys.readouterr().err
