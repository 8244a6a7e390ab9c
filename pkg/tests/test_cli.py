import json
import shutil
import subprocess

import pytest

from akblocks.cli import main

EXAMPLE = "3,3,2|2,1|1,1,1,1,1,1|2,2,1"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["--e", "9", "--a", "1,1,5,2", EXAMPLE], "1\n"),
    (["--e", "9", "--a", "1,1,5,2", "--conjugate", EXAMPLE], "6\n"),
    (["--e", "2", "--a", "0,1", "-|-"], "0\n"),
])
def test_weight(capsys, argv, expected):
    code, out, _ = run(capsys, "weight", *argv)
    assert code == 0 and out == expected


@pytest.mark.parametrize("bad", ["2,x|-", "1,2|-", ""])
def test_weight_parse_errors(capsys, bad):
    code, out, err = run(capsys, "weight", "--e", "3", "--a", "0,1", bad)
    assert code == 2 and out == "" and err


def test_weight_component_mismatch(capsys):
    code, _, err = run(capsys, "weight", "--e", "3", "--a", "0,1,2", "1|1")
    assert code == 3 and "components" in err


def test_unknown_flag_is_a_parse_error(capsys):
    assert run(capsys, "weight", "--bogus", "1|1")[0] == 2


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--e", "2", "--a", "0,0", "--n", "1")
    doc = json.loads(out)
    assert code == 0
    assert doc == {"params": {"e": 2, "r": 2, "a": [0, 0], "n": 1},
                   "blocks": [{"content": [1, 0], "weight": 1, "members": ["1|-", "-|1"], "is_chain": True}]}
    _, out, _ = run(capsys, "blocks", "--e", "3", "--a", "0,1", "--n", "2")
    assert [b["weight"] for b in json.loads(out)["blocks"]] == [1, 0, 0]
    _, out, _ = run(capsys, "blocks", "--e", "3", "--a", "0,1", "--n", "0")
    assert json.loads(out)["blocks"] == [{"content": [0, 0, 0], "weight": 0, "members": ["-|-"], "is_chain": True}]


def test_blocks_output_is_byte_stable(capsys):
    argv = ["blocks", "--e", "3", "--a", "0,1,1", "--n", "4"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_verify_instances(capsys, tmp_path):
    out_file = tmp_path / "verdict.json"
    code, _, _ = run(capsys, "verify", "--p", "7", "--q", "2", "--a", "0,1", "--n", "2",
                     "--content", "1,1,0", "--out", str(out_file))
    verdict = json.loads(out_file.read_text())
    assert code == 0 and verdict["ok"]
    assert verdict["dim_radB"] == 4 and verdict["radB_cube_dim"] == 0
    code, out, _ = run(capsys, "verify", "--p", "5", "--q", "4", "--a", "0,0", "--n", "1", "--content", "1,0")
    assert code == 0 and json.loads(out)["radB_square_dim"] == 0


def test_verify_exit_codes(capsys):
    base = ["verify", "--p", "7", "--q", "2", "--a", "0,1"]
    assert run(capsys, *base, "--n", "2", "--content", "1,0,1")[0] == 3
    assert run(capsys, *base, "--n", "6", "--content", "2,2,2")[0] == 4
    assert run(capsys, "verify", "--p", "8", "--q", "3", "--a", "0,1", "--n", "1", "--content", "1,0")[0] == 3
    assert run(capsys, *base, "--n", "2", "--content", "1,x,0")[0] == 2


def test_verify_theorem_violation_exit_code(capsys, monkeypatch):
    from akblocks.akalgebra import analysis

    monkeypatch.setattr(analysis.BlockAnalysis, "radical_powers", property(lambda self: (4, 2, 1)))
    code, out, err = run(capsys, "verify", "--p", "7", "--q", "2", "--a", "0,1", "--n", "2", "--content", "1,1,0")
    assert code == 5 and "Corollary 3.14(1)" in err
    assert json.loads(out)["checks"]["rad_cube_zero"] is False


def test_config_file_with_flag_override(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# instance B\np = 5\nq = 4\na = 0,0\nn = 2\ncontent = 1,0\n")
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--n", "1")
    assert code == 0 and json.loads(out)["params"]["n"] == 1
    cfg.write_text("nonsense\n")
    assert run(capsys, "verify", "--config", str(cfg))[0] == 2


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--r", "2", "--n", "1-2", "--e", "2-3")
    found = json.loads(out)
    keys = {(f["e"], tuple(f["a"]), f["n"], f["s"]) for f in found}
    assert code == 0
    assert (3, (0, 1), 2, 3) in keys and (2, (0, 0), 1, 2) in keys
    assert run(capsys, "search", "--n", "3-1")[1].strip() == "[]"


def test_selftest_quick(capsys):
    code, out, _ = run(capsys, "selftest", "--quick")
    assert code == 0
    assert "Lemma 3.4" in out and "FAIL" not in out


def test_console_script_installed():
    exe = shutil.which("akblocks")
    if exe is None:
        pytest.skip("package not installed as a script")
    res = subprocess.run([exe, "weight", "--e", "9", "--a", "1,1,5,2", EXAMPLE], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "1\n"
