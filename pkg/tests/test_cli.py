import json

import pytest

from holedtorus.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def test_si(capsys):
    status, out = run(capsys, "si", "aabAB")
    assert status == 0 and out.strip() == "1"


def test_canon(capsys):
    status, out = run(capsys, "canon", "Baba")
    assert status == 0 and out.strip() == "abaB"


def test_orbit_counts(capsys):
    status, out = run(capsys, "orbit", "counts", "--seed", "a", "--max-wl", "6")
    assert status == 0
    assert out.splitlines() == ["1,2,2", "2,2,4", "3,4,8", "4,4,12", "5,8,20", "6,4,24"]


def test_orbit_verify_pass(capsys):
    status, out = run(capsys, "orbit", "verify", "--seed", "aabAB", "--max-wl", "20")
    assert status == 0 and out.strip().endswith("PASS")


def test_classify(capsys):
    status, out = run(capsys, "classify", "--si", "0", "--max-wl", "12")
    assert status == 0
    assert "2 orbits of self-intersection 0" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["orbit", "frobnicate", "--seed", "a", "--max-wl", "5"])
    assert exc.value.code == 2


def test_domain_error_exit_code(capsys):
    status = main(["si", "abab"])  # proper power
    assert status == 1
    assert "error" in capsys.readouterr().err


def test_outputs_and_manifest(tmp_path, capsys):
    out_dir = tmp_path / "run"
    status, _ = run(
        capsys, "orbit", "counts", "--seed", "aabAB", "--max-wl", "12",
        "--out", str(out_dir),
    )
    assert status == 0
    manifest = json.loads((out_dir / "manifest.json").read_text())
    assert manifest["command"] == "orbit"
    assert manifest["outputs"] == ["counts.csv"]
    lines = (out_dir / "counts.csv").read_text().splitlines()
    assert lines[0] == "wordlength,count,cumulative"
    assert lines[5] == "5,4,4"  # first members at wl 5: 4*phi(1)


def test_metric_build_json(tmp_path, capsys):
    out_dir = tmp_path / "m"
    status, out = run(
        capsys, "metric", "build", "--l1", "1", "--l2", "1.2", "--l3", "1.012",
        "--out", str(out_dir),
    )
    assert status == 0
    doc = json.loads((out_dir / "metric.json").read_text())
    assert doc["c"] == 1.012
    assert doc["placement"] == "vertex"


def test_fit_cli(capsys):
    status, out = run(capsys, "fit", "--seed", "abaB", "--max-wl", "40")
    assert status == 0
    assert "p: 1/4" in out
