"""Command-line interface: schemas, exit codes, reproducibility.

Every test runs the installed entry point in a subprocess so argument
parsing, environment handling, and exit codes are exercised exactly as a
shell user sees them.
"""

import json
import os
import subprocess
import sys

CLI = [sys.executable, "-m", "compfade"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env["COMPFADE_BACKEND"] = "numpy"  # skip JIT warmup in short-lived processes
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        CLI + list(args), capture_output=True, env=env
    )


AEF_CURVE = [
    "curve", "--dist", "aef", "--alpha", "3.5", "--eta", "0.5",
    "--mu", "1.5", "--ms", "3", "--quantity", "snr-pdf",
    "--gamma-bar", "2", "--from", "0.5", "--to", "2", "--points", "4",
]
FISHER_CURVE = [
    "curve", "--dist", "akf", "--alpha", "2", "--kappa", "0",
    "--mu", "1", "--ms", "2", "--quantity", "snr-cdf",
    "--gamma-bar", "1", "--from", "1", "--to", "1", "--points", "1",
]
SAMPLE = [
    "sample", "--dist", "aef", "--alpha", "2.5", "--eta", "0.4",
    "--mu", "2", "--ms", "4", "--n", "64", "--seed", "123",
]


def test_curve_csv_schema_and_exit_zero():
    r = run_cli(*AEF_CURVE)
    assert r.returncode == 0, r.stderr
    lines = r.stdout.decode().splitlines()
    assert lines[0] == "x,value,est_error,converged"
    assert len(lines) == 5
    for line in lines[1:]:
        x, v, e, c = line.split(",")
        float(x), float(v), float(e)
        assert c in ("true", "false")
    # newline discipline: LF only
    assert b"\r" not in r.stdout


def test_curve_fisher_row_is_exact():
    r = run_cli(*FISHER_CURVE)
    assert r.returncode == 0
    row = r.stdout.decode().splitlines()[1]
    assert row == "1.0,0.75,0.0,true"


def test_curve_json_schema():
    r = run_cli(*AEF_CURVE, "--out", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout.decode())
    assert set(doc) == {"spec", "rows"}
    assert doc["spec"]["quantity"] == "snr-pdf"
    assert len(doc["rows"]) == 4
    assert set(doc["rows"][0]) == {"x", "value", "est_error", "converged"}


def test_curve_db_rescales_x_column():
    r_lin = run_cli(*AEF_CURVE)
    r_db = run_cli(*AEF_CURVE, "--db")
    rows_lin = [l.split(",") for l in r_lin.stdout.decode().splitlines()[1:]]
    rows_db = [l.split(",") for l in r_db.stdout.decode().splitlines()[1:]]
    import math
    for lin, db in zip(rows_lin, rows_db):
        assert abs(float(db[0]) - 10.0 * math.log10(float(lin[0]))) <= 1e-12
        assert db[1] == lin[1]  # values untouched


def test_curve_op_asym_matches_gain_slope():
    args = [
        "curve", "--dist", "akf", "--alpha", "2.5", "--kappa", "1.5",
        "--mu", "1.2", "--ms", "4", "--quantity", "op-asym",
        "--gamma-bar", "10000", "--from", "1", "--to", "1", "--points", "1",
    ]
    r = run_cli(*args)
    assert r.returncode == 0
    val = float(r.stdout.decode().splitlines()[1].split(",")[1])
    assert 0.0 < val < 1e-3


def test_cross_family_flags_rejected():
    r = run_cli(
        "curve", "--dist", "akf", "--alpha", "2", "--eta", "0.5",
        "--mu", "1", "--ms", "2", "--quantity", "snr-pdf",
        "--from", "1", "--to", "2",
    )
    assert r.returncode == 1
    assert b"eta" in r.stderr
    r2 = run_cli(
        "curve", "--dist", "aef", "--alpha", "2", "--kappa", "1",
        "--mu", "1", "--ms", "2", "--quantity", "snr-pdf",
        "--from", "1", "--to", "2",
    )
    assert r2.returncode == 1
    assert b"kappa" in r2.stderr


def test_quantity_scale_flags_rejected():
    # envelope-pdf is scaled by --omega, the SNR quantities by
    # --gamma-bar; mixing them up is a usage error.
    r = run_cli(
        "curve", "--dist", "aef", "--alpha", "2", "--eta", "1",
        "--mu", "1", "--ms", "4", "--quantity", "envelope-pdf",
        "--gamma-bar", "2", "--from", "0.1", "--to", "1",
    )
    assert r.returncode == 1
    r2 = run_cli(
        "curve", "--dist", "aef", "--alpha", "2", "--eta", "1",
        "--mu", "1", "--ms", "4", "--quantity", "snr-pdf",
        "--omega", "2", "--from", "0.1", "--to", "1",
    )
    assert r2.returncode == 1


def test_bad_grid_rejected():
    base = [
        "curve", "--dist", "aef", "--alpha", "2", "--eta", "1",
        "--mu", "1", "--ms", "4", "--quantity", "snr-pdf",
    ]
    assert run_cli(*base, "--from", "2", "--to", "1").returncode == 1
    assert run_cli(*base, "--from", "1", "--to", "2", "--points", "0").returncode == 1
    assert run_cli(*base, "--from", "0", "--to", "2", "--log").returncode == 1
    assert run_cli(*base, "--from", "1", "--to", "2", "--points", "1").returncode == 1


def test_usage_errors_exit_one():
    assert run_cli("curve", "--dist", "aef").returncode == 1
    assert run_cli("nonsense").returncode == 1
    assert run_cli().returncode == 1


def test_domain_errors_exit_one():
    r = run_cli(
        "curve", "--dist", "aef", "--alpha", "2", "--eta", "-0.5",
        "--mu", "1", "--ms", "4", "--quantity", "snr-pdf",
        "--from", "0.5", "--to", "2",
    )
    assert r.returncode == 1
    assert r.stderr  # names the offending parameter


def test_unconverged_curve_exits_two():
    # Near-degenerate imbalance slows the CDF series enough that a small
    # term budget converges some grid points but not others; the rows
    # must still come out, flagged, with exit code 2.
    args = [
        "curve", "--dist", "aef", "--alpha", "2", "--eta", "0.02",
        "--mu", "1", "--ms", "3", "--quantity", "snr-cdf",
        "--gamma-bar", "1", "--from", "2", "--to", "8", "--points", "3",
    ]
    r = run_cli(*args, env_extra={"COMPFADE_MAX_TERMS": "250"})
    assert r.returncode == 2
    lines = r.stdout.decode().splitlines()
    assert len(lines) == 4
    flags = [line.split(",")[3] for line in lines[1:]]
    assert "false" in flags


def test_sample_csv_and_determinism():
    r1 = run_cli(*SAMPLE)
    r2 = run_cli(*SAMPLE)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout
    lines = r1.stdout.decode().splitlines()
    assert lines[0] == "sample"
    assert len(lines) == 65
    float(lines[1])


def test_sample_chunks_do_not_change_output():
    base = run_cli(*SAMPLE, "--chunks", "1")
    for chunks in (2, 3, 7):
        r = run_cli(*SAMPLE, "--chunks", str(chunks))
        assert r.stdout == base.stdout, f"chunks={chunks} changed the stream"


def test_sample_zero_n_is_header_only():
    r = run_cli("sample", "--dist", "akf", "--alpha", "2", "--kappa", "1",
                "--mu", "2", "--ms", "4", "--n", "0", "--seed", "5")
    assert r.returncode == 0
    assert r.stdout.decode() == "sample\n"


def test_sample_fractional_mu_exits_one():
    r = run_cli("sample", "--dist", "akf", "--alpha", "2", "--kappa", "1",
                "--mu", "1.5", "--ms", "4", "--n", "4", "--seed", "5")
    assert r.returncode == 1
    assert b"integer mu" in r.stderr


def test_sample_json_schema():
    r = run_cli(*SAMPLE, "--out", "json")
    doc = json.loads(r.stdout.decode())
    assert set(doc) == {"spec", "samples"}
    assert len(doc["samples"]) == 64
    assert doc["spec"]["seed"] == 123


def test_validate_quick_passes():
    r = run_cli("validate", "--level", "quick")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout.decode())
    assert doc["passed"] is True
    assert doc["level"] == "quick"
    assert all(set(c) >= {"name", "measured", "limit", "passed"} for c in doc["checks"])


def test_validate_detects_seeded_defect():
    # The hidden flag flips the sign of the imbalance term inside the
    # analytic CDF only; the physical sampler is untouched, so the KS
    # comparison must catch the disagreement and name the check.
    r = run_cli("validate", "--level", "quick", "--flip-h-sign")
    assert r.returncode == 3
    doc = json.loads(r.stdout.decode())
    assert doc["passed"] is False
    failed = [c["name"] for c in doc["checks"] if not c["passed"]]
    assert failed and all(name.startswith("mc-ks") for name in failed)
