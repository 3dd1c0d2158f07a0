import json

import pytest

from verschiebung.cli import main
from verschiebung.serialize import map_from_json_obj


def test_derive_text_to_stdout(capsys):
    assert main(["derive", "--p", "3"]) == 0
    out, err = capsys.readouterr()
    assert "V00 = y00^3" in out
    assert err.startswith("sha256 ")


def test_derive_json_file(tmp_path, capsys, derived):
    path = tmp_path / "v5.json"
    assert main(["derive", "--p", "5", "--format", "json", "--out", str(path)]) == 0
    out, _ = capsys.readouterr()
    assert out.startswith("sha256 ")
    forms = map_from_json_obj(json.loads(path.read_text()))
    assert forms["V00"] == derived(5)[1].V00
    # same bytes on a second run
    again = tmp_path / "again.json"
    main(["derive", "--p", "5", "--format", "json", "--out", str(again)])
    assert again.read_bytes() == path.read_bytes()


def test_verify_p3_symbolic(capsys):
    assert main(["verify", "--p", "3"]) == 0
    out, _ = capsys.readouterr()
    assert "polar convention: k01,k10,k11" in out
    assert out.rstrip().endswith("PASS")


def test_verify_p7_symbolic_is_gated(capsys):
    assert main(["verify", "--p", "7"]) == 2
    assert "--long-running" in capsys.readouterr().err


def test_verify_p7_specialized_json(capsys):
    assert main(["verify", "--p", "7", "--mode", "specialized", "--trials", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] and data["divisible"] and data["square_status"] == "conjectural"


def test_verify_bad_trials():
    assert main(["verify", "--p", "5", "--mode", "specialized", "--trials", "0"]) == 2


@pytest.mark.parametrize("argv", [["oracle", "omega"], ["oracle", "chart", "--p", "5"], ["oracle", "ec", "--trials", "10"]])
def test_oracles_pass(argv, capsys):
    assert main(argv) == 0
    last = capsys.readouterr().out.splitlines()[-1]
    n, total = last.split()[0].split("/")
    assert n == total


def test_oracle_kernel_r3_fails(capsys):
    assert main(["oracle", "kernel", "--r", "3"]) == 1
    assert "0/1 passed" in capsys.readouterr().out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "omega", "--tau", "0000"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["derive", "--p", "11"])
    assert exc.value.code == 2
    assert main(["oracle", "kernel", "--r", "-1"]) == 2
