import json

import pytest

from fuchs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_realizable_positive(capsys):
    code, out, _ = run(capsys, "realizable", "C8")
    assert code == 0
    assert "realizable" in out and "F9" in out


def test_realizable_negative_exit_code(capsys):
    code, out, _ = run(capsys, "realizable", "C128")
    assert code == 1
    assert "not realizable" in out


def test_realizable_with_char_json(capsys):
    code, out, _ = run(capsys, "realizable", "C4", "--char", "4", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["realizable"] is True
    assert blob["char"] == 4
    assert blob["group"] == "C_4"


def test_realizable_quasi_cyclic(capsys):
    code, out, _ = run(capsys, "realizable", "C2^inf", "--json")
    assert code == 1
    assert json.loads(out)["reason"] == "quasi-cyclic-excluded"


def test_realizable_torsion_free(capsys):
    code, out, _ = run(capsys, "realizable", "Z[1/2]", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["witness"] == "F2[G]" and blob["characteristics"] == [2]


def test_witness_prints_presentation(capsys):
    code, out, _ = run(capsys, "witness", "C4", "--char", "4")
    assert code == 0
    assert "Z4[x]/(x^2-2,2x)" in out


def test_witness_unrealizable(capsys):
    code, _, err = run(capsys, "witness", "C8", "--char", "2")
    assert code == 1
    assert "not realizable" in err


def test_units_command(capsys):
    code, out, _ = run(capsys, "units", "Z4[x]/(x^2-2,2x)", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["unit_count"] == 4 and blob["structure"] == [4]


def test_units_bad_input(capsys):
    code, _, err = run(capsys, "units", "GF(6)")
    assert code == 2
    assert "prime power" in err


def test_units_size_limit(capsys, monkeypatch):
    monkeypatch.setenv("FUCHS_MAX_RING_ORDER", "50")
    code, _, err = run(capsys, "units", "Z9[x]/(x^2)")
    assert code == 3
    assert "exceeds" in err


def test_verify_selected_suites(capsys):
    code, out, _ = run(capsys, "verify", "char0", "lemmas")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert all("PASS" in line for line in lines)


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nonsense")
    assert code == 2
    assert "unknown suite" in err


def test_verify_json_and_report_dir(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "char0", "--json",
                         "--report-dir", str(tmp_path / "rep"))
    assert code == 0
    blob = json.loads(out)
    assert blob[0]["check"] == "char0" and blob[0]["passed"] is True
    rep = tmp_path / "rep"
    assert (rep / "report.tsv").exists()
    assert (rep / "report.json").exists()
    assert (rep / "report.png").stat().st_size > 0


def test_enumerate_command(capsys, tmp_path):
    code, out, err = run(capsys, "enumerate", "4,2", "--json",
                         "--report-dir", str(tmp_path / "census"))
    assert code == 0
    lines = [json.loads(line) for line in out.strip().split("\n")]
    assert len(lines) == 4
    assert all(entry["characteristic"] == 4 for entry in lines)
    outdir = tmp_path / "census"
    assert (outdir / "census.jsonl").exists()
    assert (outdir / "census.png").stat().st_size > 0


def test_enumerate_bad_type(capsys):
    code, _, err = run(capsys, "enumerate", "4;2")
    assert code == 2


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "x^7-1", "--char", "2", "--json")
    assert code == 0
    blob = json.loads(out)
    assert len(blob["factors"]) == 3
    assert all(f["multiplicity"] == 1 for f in blob["factors"])


def test_factor_requires_prime_char(capsys):
    code, _, err = run(capsys, "factor", "x^2-1", "--char", "6")
    assert code == 2


def test_numtheory_command(capsys):
    code, out, _ = run(capsys, "numtheory", "257", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["prime"] and blob["fermat_prime"] and not blob["mersenne_prime"]
    assert blob["power_equation_solutions"] == [{"m": 1, "p": 2, "r": 8}]


def test_numtheory_composite(capsys):
    code, out, _ = run(capsys, "numtheory", "24")
    assert code == 0
    assert "2^3 * 3" in out
