import csv
import io
import json
import math
import subprocess
import sys

import pytest

from conrad.cli import run_command, sweep_rows
from conrad.operators import ClassSpec
from conrad.radii import RadiusResult, radius_for


def run(capsys, *argv):
    code = run_command(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_radius_pprime_text(capsys):
    code, out, _ = run(capsys, "radius", "--class", "pprime", "--A", "2")
    assert code == 0
    assert "0.105572809" in out
    assert "closed-form" in out


def test_radius_u0_json(capsys):
    code, out, _ = run(capsys, "radius", "--class", "u0", "--A", "2", "--lambda", "1", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["r1"] == 1.0
    assert d["r2"] == pytest.approx(1 / 7, abs=1e-9)
    assert d["value"] == d["r2"]
    assert d["method"] == "min-of-two"


@pytest.mark.parametrize("argv, spec", [
    (["--class", "pprime", "--A", "1.7"], ClassSpec("pprime", A=1.7)),
    (["--class", "lif", "--A", "1.3", "--alpha", "2.5"], ClassSpec("lif", A=1.3, alpha=2.5)),
    (["--class", "pprime-fixed", "--A", "2", "--a", "0.4"], ClassSpec("pprime-fixed", A=2, a=0.4)),
    (["--class", "vp-convex", "--lambda", "0.6", "--p", "0.35"], ClassSpec("vp-convex", lam=0.6, p=0.35)),
    (["--class", "u0", "--A", "1.2", "--lambda", "0.3"], ClassSpec("u0", A=1.2, lam=0.3)),
])
def test_radius_json_round_trip(capsys, argv, spec):
    code, out, _ = run(capsys, "radius", *argv, "--json")
    assert code == 0
    d = json.loads(out)
    assert ClassSpec.from_dict(d["class"]) == spec
    assert RadiusResult.from_dict(d) == radius_for(spec)


def test_verify_vp_example(capsys):
    code, out, _ = run(capsys, "verify", "--class", "vp", "--lambda", "1", "--p", "0.5",
                       "--samples", "200", "--seed", "7", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["failures"] == 0
    assert d["samples"] == 200
    assert set(d) == {"classSpec", "samples", "failures", "worstMargin", "witness", "radiusUsed"}


def test_verify_failure_exits_one(capsys):
    # members of this class dip below zero inside the stated radius
    code, out, _ = run(capsys, "verify", "--class", "starlike-half", "--A", "2", "--samples", "50")
    assert code == 1
    assert "FAIL" in out


def test_verify_seed_from_environment(capsys, monkeypatch):
    base = ["verify", "--class", "pprime", "--A", "2", "--samples", "5", "--json"]
    _, explicit, _ = run(capsys, *base, "--seed", "11")
    monkeypatch.setenv("CONRAD_SEED", "11")
    _, from_env, _ = run(capsys, *base)
    _, flag_wins, _ = run(capsys, *base, "--seed", "3")
    assert from_env == explicit
    assert flag_wins != explicit
    monkeypatch.setenv("CONRAD_SEED", "eleven")
    code, out, _ = run(capsys, *base)
    assert code == 2 and out == ""


def test_poly_and_identities(capsys):
    code, out, _ = run(capsys, "poly", "--class", "u0", "--A", "2", "--lambda", "1", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["atBracket"] == pytest.approx([1.0, -24.0])
    code, out, _ = run(capsys, "identities")
    assert code == 0
    assert out.count("PASS") == 6


def test_sharpness_command(capsys):
    code, out, _ = run(capsys, "sharpness", "--class", "lif", "--A", "2", "--alpha", "2", "--eps", "0.005")
    assert code == 0
    assert "PASS" in out


@pytest.mark.parametrize("argv, flag", [
    (["radius", "--class", "pprime", "--A", "3"], "--A"),
    (["radius", "--class", "pprime", "--A", "1"], "--A"),
    (["radius", "--class", "vp", "--lambda", "0.5", "--p", "1.2"], "--p"),
    (["radius", "--class", "u0", "--A", "2", "--lambda", "0"], "--lambda"),
    (["radius", "--class", "pprime", "--A", "2", "--alpha", "1"], "--alpha"),
    (["radius", "--class", "nosuch", "--A", "2"], "--class"),
    (["radius", "--class", "pprime", "--A", "two"], "--A"),
    (["radius", "--A", "2"], "--class"),
    (["poly", "--class", "pprime", "--A", "2"], "--class"),
    (["sweep", "--class", "pprime", "--param", "A", "--from", "1.1", "--to", "2", "--steps", "1"], "--steps"),
    (["sweep", "--class", "pprime", "--param", "A", "--from", "1.1", "--to", "2.5", "--steps", "4"], "--A"),
])
def test_usage_errors(capsys, argv, flag):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert flag in err


def test_unknown_command(capsys):
    code, out, _ = run(capsys, "explode")
    assert code == 2
    assert out == ""


def test_sweep_pprime_increasing(tmp_path, capsys):
    path = tmp_path / "a.csv"
    code, _, _ = run(capsys, "sweep", "--class", "pprime", "--param", "A", "--from", "1.1", "--to", "2",
                     "--steps", "10", "--out", str(path))
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 10
    values = [float(r["value"]) for r in rows]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert path.read_text().splitlines()[0] == "param,value,r1,r2,method"


def test_sweep_lif_decreasing(capsys):
    code, out, _ = run(capsys, "sweep", "--class", "lif", "--A", "2", "--param", "alpha",
                       "--from", "1", "--to", "3", "--steps", "9")
    assert code == 0
    values = [float(r["value"]) for r in csv.DictReader(io.StringIO(out))]
    assert len(values) == 9
    assert all(b < a for a, b in zip(values, values[1:]))


def test_sweep_vp_below_pole():
    rows = list(csv.DictReader(io.StringIO("\n".join(
        sweep_rows(ClassSpec("vp", lam=0.5, p=0.1), "p", 0.1, 0.9, 9)))))
    for r in rows:
        assert float(r["value"]) < float(r["param"])
        assert float(r["r2"]) < float(r["param"])


def test_sweep_formatting():
    rows = sweep_rows(ClassSpec("pprime", A=1.5), "A", 1.5, 2.0, 2)
    assert rows[2] == f"2,{radius_for(ClassSpec('pprime', A=2)).value:.12g},,,closed-form"
    assert rows[2].split(",")[1] == "0.105572809"
    assert len(rows[1].split(",")[1].replace("0.", "").lstrip("0")) <= 12


def test_sweep_is_byte_deterministic(tmp_path, capsys):
    argv = ["sweep", "--class", "vp-convex", "--lambda", "0.8", "--param", "p",
            "--from", "0.2", "--to", "0.8", "--steps", "25"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, *argv, "--out", str(a))[0] == 0
    assert run(capsys, *argv, "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_unwritable_path(tmp_path, capsys):
    target = tmp_path / "missing" / "dir" / "x.csv"
    code, out, err = run(capsys, "sweep", "--class", "pprime", "--param", "A", "--from", "1.1",
                         "--to", "2", "--steps", "3", "--out", str(target))
    assert code == 1
    assert out == ""
    assert "cannot write" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "conrad", "radius", "--class", "lif", "--A", "2",
                           "--alpha", "2", "--json"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == pytest.approx(7 - 4 * math.sqrt(3), abs=1e-14)
