"""CLI surface: subcommands, exit codes, deterministic JSON."""

import json

import pytest

from prymlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_park_subcommand(capsys):
    code, out, err = run_cli(capsys, "park", "--genus", "9", "--k", "4")
    assert code == 0
    assert json.loads(out) == {"nu": 4, "p": 1, "regularity": 5}
    assert "nu=4" in err


def test_park_rejects_bad_k(capsys):
    code, _, err = run_cli(capsys, "park", "--genus", "9", "--k", "2")
    assert code == 2
    assert "error" in err


def test_curve_new_and_downstream(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5")
    assert code == 0
    curve_file = tmp_path / "curve.json"
    curve_file.write_text(out)

    code, out, _ = run_cli(capsys, "eta", "list", "--curve", str(curve_file))
    assert code == 0
    listing = json.loads(out)
    assert listing["count"] == 15
    assert listing["k_histogram"] == {"1": 15}

    code, out, _ = run_cli(
        capsys, "cliff", "--curve", str(curve_file), "--eta", "w1,w2", "--mode", "search"
    )
    assert code == 0
    report = json.loads(out)
    assert report["cliff_eta"] == 0
    assert report["cliff_dim"] == [0, 0]
    assert report["mode"] == "search"
    assert report["pool"] == "weierstrass"


def test_curve_new_rejects_duplicates(capsys):
    code, _, err = run_cli(capsys, "curve", "new", "--roots", "1,1,2,3,4")
    assert code == 2
    assert "squarefree" in err


def test_cliff_rejects_odd_eta(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5")
    curve_file = tmp_path / "curve.json"
    curve_file.write_text(out)
    code, _, err = run_cli(capsys, "cliff", "--curve", str(curve_file), "--eta", "w1")
    assert code == 2
    assert "even" in err


def test_cliff_rejects_trivial_eta(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5")
    curve_file = tmp_path / "curve.json"
    curve_file.write_text(out)
    # repeated labels collapse as a set, making the class trivial
    code, _, err = run_cli(capsys, "cliff", "--curve", str(curve_file), "--eta", "")
    assert code == 2
    assert "trivial" in err


def test_scroll_subcommand(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5,6,7,8,9,10,11")
    curve_file = tmp_path / "curve5.json"
    curve_file.write_text(out)
    code, out, _ = run_cli(
        capsys, "scroll", "--curve", str(curve_file), "--eta", "w1,w2,w3,w4,w5,w6"
    )
    assert code == 0
    data = json.loads(out)
    assert data["scroll"] == [1, 1]
    assert data["d_sequence"] == [2, 2]
    assert data["nu"] == 5


def test_scroll_rejects_k1(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5,6,7")
    curve_file = tmp_path / "curve3.json"
    curve_file.write_text(out)
    code, _, err = run_cli(capsys, "scroll", "--curve", str(curve_file), "--eta", "w1,w2")
    assert code == 2
    assert "base points" in err


def test_h0_subcommand(tmp_path, capsys):
    code, out, _ = run_cli(capsys, "curve", "new", "--roots", "1,2,3,4,5")
    curve_file = tmp_path / "curve.json"
    curve_file.write_text(out)
    divisor_file = tmp_path / "div.json"
    divisor_file.write_text(json.dumps({"terms": [
        {"point": {"label": "w1"}, "mult": 1},
        {"point": {"label": "w2"}, "mult": 1},
        {"point": {"label": "w3"}, "mult": 1},
    ]}))
    code, out, _ = run_cli(capsys, "h0", "--curve", str(curve_file), "--divisor", str(divisor_file))
    assert code == 0
    assert json.loads(out) == {"degree": 3, "h0": 2}


def test_missing_file_is_input_error(capsys):
    code, _, err = run_cli(capsys, "eta", "list", "--curve", "/nonexistent.json")
    assert code == 2
    assert "no such file" in err


def test_verify_small_suite(capsys):
    code, out, err = run_cli(capsys, "verify", "two-torsion", "--genus-max", "2")
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0
    assert data["passed"] == len(data["checks"]) > 0
    assert all(c["status"] == "pass" for c in data["checks"])
    assert "suite two-torsion" in err


def test_verify_unknown_suite(capsys):
    code, _, err = run_cli(capsys, "verify", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_json_output_is_byte_identical(capsys):
    _, out1, _ = run_cli(capsys, "park", "--genus", "9", "--k", "4")
    _, out2, _ = run_cli(capsys, "park", "--genus", "9", "--k", "4")
    assert out1 == out2


def test_table_format(capsys):
    code, out, _ = run_cli(capsys, "park", "--genus", "9", "--k", "4", "--format", "table")
    assert code == 0
    assert "nu\t4" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)
