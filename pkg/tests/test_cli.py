import json

import pytest

from tropcommute.cli import main

EXAMPLE = "0.166 0.861; -0.62 -0.76"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_commuting(capsys):
    code, out, _ = run(capsys, "check", EXAMPLE, "0 -inf; -inf 0")
    assert code == 0
    assert out.strip().endswith("COMMUTE")


def test_check_not_commuting(capsys):
    code, out, _ = run(capsys, "check", "0 1; 2 -5", "0 100; -inf 0")
    assert code == 1
    assert "DO NOT COMMUTE" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--format", "json", EXAMPLE, EXAMPLE)
    data = json.loads(out)
    assert code == 0 and data["commute"] is True
    assert data["A"] == [[0.166, 0.861], [-0.62, -0.76]]


def test_malformed_input_reports_position(capsys):
    code, _, err = run(capsys, "basis", "0.1 zz; 1 2")
    assert code == 2
    assert "row 1, column 2" in err


@pytest.mark.parametrize("text", ["1 2 3; 4 5 6", "0 -inf; 1 2"])
def test_bad_shape_or_nonfinite(capsys, text):
    code, _, err = run(capsys, "basis", text)
    assert code == 2 and err.startswith("error:")


def test_basis_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    f = tmp_path / "a.txt"
    f.write_text(EXAMPLE + "\n")
    code, out, _ = run(capsys, "basis", str(f))
    assert code == 0
    assert "case: AboveDiagonal" in out and "verdict: PASS" in out

    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(EXAMPLE))
    code, out2, _ = run(capsys, "basis", "-")
    assert code == 0 and out2 == out


def test_basis_json(capsys):
    code, out, _ = run(capsys, "basis", "--format", "json", "--grid-radius", "3", "1 2; 0 1")
    data = json.loads(out)
    assert code == 0
    assert data["case"] == "EqualDiagonal"
    assert len(data["basis"]) == 6
    assert data["alpha1"] is None
    assert all(c["pass"] for c in data["checks"])


def test_basis_near_degenerate_warning(capsys):
    code, out, _ = run(capsys, "basis", "--grid-radius", "2", "5e-9 1; 2 0")
    assert "WARNING: near-degenerate" in out


def test_bary_tsv_to_stdout(capsys):
    code, out, err = run(capsys, "bary", "--format", "tsv", EXAMPLE)
    assert code == 0
    assert len(out.splitlines()) == 5
    assert "concurrency: PASS" in err


def test_bary_svg_with_out(capsys, tmp_path):
    target = tmp_path / "cone.svg"
    code, out, _ = run(capsys, "bary", "--format", "svg", "--out", str(target), EXAMPLE)
    assert code == 0
    assert target.read_bytes().startswith(b"<?xml")
    table = tmp_path / "cone.tsv"
    assert table.read_text().splitlines()[1].startswith("beta1\t")
    assert f"wrote {table}" in out


def test_bary_unwritable_out(capsys, tmp_path):
    code, _, err = run(capsys, "bary", "--out", str(tmp_path / "missing" / "x.svg"), EXAMPLE)
    assert code == 2 and "cannot write" in err


def test_bary_equal_diagonal(capsys):
    code, _, err = run(capsys, "bary", "1 2; 0 1")
    assert code == 3 and "equal diagonal" in err


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "verdict: PASS" in out
    assert "symmetric form 10/10" in out


@pytest.mark.parametrize("seed", range(1, 11))
def test_verify_other_seeds(capsys, seed):
    code, out, _ = run(capsys, "verify", "--seed", str(seed), "--matrices", "2", "--format", "json")
    assert code == 0 and json.loads(out)["seed"] == seed


def test_verify_mutated_basis_fails_with_witness(capsys):
    code, out, _ = run(capsys, "verify", "--matrices", "2", "--mutate-basis")
    assert code == 1
    failing = [l for l in out.splitlines() if l.startswith("[FAIL] verify_basis")]
    assert len(failing) == 3
    assert all("witness=" in l for l in failing)


def test_argparse_rejects_bad_radius():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--grid-radius", "0"])
    assert info.value.code == 2
