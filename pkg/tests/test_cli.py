"""End-to-end tests of the command-line harness."""

import math

import numpy as np
import pytest

import szegolyap.cocycle as cocycle
from szegolyap.cli import CSV_HEADER, main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_bound_table(capsys):
    rc, out, _ = run(capsys, "bound", "--eps", "0.5,0.8")
    assert rc == 0
    lines = out.strip().splitlines()
    assert "0.54930614433405478" in lines[1]
    assert "true" in lines[1]
    assert "false" in lines[2]


def test_bound_boundary_value(capsys):
    rc, out, _ = run(capsys, "bound", "--eps", str(1.0 / math.sqrt(2.0)))
    assert rc == 0
    value = float(out.strip().splitlines()[1].split()[1])
    assert abs(value) < 1e-15


def test_bound_rejects_out_of_range(capsys):
    rc, _, err = run(capsys, "bound", "--eps", "1.5")
    assert rc == 2
    assert "epsilon" in err


def test_scan_csv(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    rc, _, _ = run(
        capsys,
        "scan",
        "--eps", "0.5",
        "--z-grid", "8",
        "--n", "2000",
        "--out", str(out_path),
    )
    assert rc == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 9
    for line in lines[1:]:
        fields = line.split(",")
        assert fields[4] == "birkhoff"
        gamma, bound, margin = float(fields[5]), float(fields[6]), float(fields[7])
        assert margin == gamma - bound
        assert margin > -0.01
        assert gamma >= -1e-9


def test_scan_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        rc, _, _ = run(
            capsys,
            "scan",
            "--eps", "0.3,0.5",
            "--z-grid", "4",
            "--n", "500",
            "--seed", "7",
            "--method", "both",
            "--grid", "16",
            "--out", str(p),
        )
        assert rc == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_scan_empty_eps(capsys):
    rc, _, err = run(capsys, "scan", "--eps", ",", "--n", "10")
    assert rc == 2
    assert "empty" in err


def test_scan_lambda_above_radius(capsys):
    rc, _, err = run(
        capsys,
        "scan",
        "--eps", "0.5",
        "--k", "1",
        "--lambda", "0.5,0",
        "--coeffs", "1,0;1,0",
        "--n", "10",
    )
    assert rc == 2
    assert "admissible" in err


def test_scan_svg(tmp_path, capsys):
    out_path = tmp_path / "scan.csv"
    svg_path = tmp_path / "scan.svg"
    rc, _, _ = run(
        capsys,
        "scan",
        "--eps", "0.4,0.6",
        "--z-grid", "6",
        "--n", "300",
        "--out", str(out_path),
        "--svg", str(svg_path),
    )
    assert rc == 0
    text = svg_path.read_text()
    assert text.startswith("<svg")
    assert "polyline" in text
    assert "eps = 0.4" in text


def test_scan_stdout_when_no_out(capsys):
    rc, out, _ = run(capsys, "scan", "--eps", "0.5", "--z-grid", "2", "--n", "50")
    assert rc == 0
    assert out.splitlines()[0] == CSV_HEADER


def test_verify_t1_passes(capsys):
    rc, out, _ = run(
        capsys,
        "verify-t1",
        "--eps", "0.5",
        "--z-grid", "8",
        "--n", "4",
        "--grid", "256",
    )
    assert rc == 0
    assert "PASS" in out


def test_verify_t1_negative_bound_still_passes(capsys):
    rc, out, _ = run(
        capsys,
        "verify-t1",
        "--eps", "0.95",
        "--z-grid", "4",
        "--n", "3",
        "--grid", "256",
    )
    assert rc == 0
    assert "PASS" in out


def test_verify_t1_detects_corrupted_kernel(capsys):
    cocycle._KERNEL_SIGN_FLIP = True
    try:
        rc, out, _ = run(
            capsys,
            "verify-t1",
            "--eps", "0.5",
            "--z-grid", "4",
            "--n", "4",
            "--grid", "128",
        )
    finally:
        cocycle._KERNEL_SIGN_FLIP = False
    assert rc == 1
    assert "FAIL" in out


def test_verify_t1_rejects_perturbed(capsys):
    rc, _, err = run(
        capsys, "verify-t1", "--eps", "0.5", "--lambda", "0.01,0", "--n", "2"
    )
    assert rc == 2
    assert "exponential" in err


def test_verify_t2_report(capsys):
    rc, out, _ = run(
        capsys,
        "verify-t2",
        "--eps", "0.5",
        "--k", "2",
        "--z-grid", "4",
        "--n", "3000",
    )
    assert rc == 0
    assert "NON-RIGOROUS" in out
    assert "lambda_max" in out


def test_subharmonic_report(capsys):
    rc, out, _ = run(
        capsys,
        "subharmonic",
        "--eps", "0.3",
        "--z-grid", "4",
        "--n", "4",
        "--grid", "256",
    )
    assert rc == 0
    assert "PASS" in out


def test_config_file_defaults_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("eps = 0.5\nz-grid = 3\nn = 100\n# comment\nseed = 5\n")
    out_a = tmp_path / "a.csv"
    rc, _, _ = run(
        capsys, "scan", "--config", str(cfg), "--out", str(out_a)
    )
    assert rc == 0
    lines = out_a.read_text().splitlines()
    assert len(lines) == 4  # header + 3 z points from the config file
    # a flag on the command line beats the file value
    out_b = tmp_path / "b.csv"
    rc, _, _ = run(
        capsys, "scan", "--config", str(cfg), "--z-grid", "2", "--out", str(out_b)
    )
    assert rc == 0
    assert len(out_b.read_text().splitlines()) == 3


def test_config_file_bad_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("bogus = 1\n")
    rc, _, err = run(capsys, "scan", "--config", str(cfg))
    assert rc == 2
    assert "unknown key" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["scan", "--method", "nonsense"])
    assert exc.value.code == 2
