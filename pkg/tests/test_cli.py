import json

import pytest

from hecke2b.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_region_json(capsys):
    code, out, _ = run(capsys, "region", "--c", "2,2,3", "--r1", "1", "--r2", "3", "--J", "e3-e2")
    assert code == 0
    data = json.loads(out)
    assert data["Z"] == ["e2-e1"]
    assert data["P"] == ["e3", "e3-e1", "e3-e2"]
    assert data["F"] == [[-3, 2, 1], [-2, 3, 1], [-1, 3, 2], [1, 3, 2]]
    assert data["skew"] is False


def test_region_single_box(capsys):
    code, out, _ = run(capsys, "region", "--c", "5", "--r1", "1", "--r2", "3")
    assert code == 0
    assert json.loads(out)["F"] == [[-1], [1]]


def test_region_text(capsys):
    code, out, _ = run(capsys, "region", "--c", "5", "--r1", "1", "--r2", "3", "--format", "text")
    assert code == 0 and out.strip()


def test_domain_errors_exit_two(capsys):
    code, _, err = run(capsys, "region", "--c", "1", "--r1", "1", "--r2", "3", "--J", "e2")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "region", "--c", "1,1/2", "--r1", "1", "--r2", "3")
    assert code == 2
    code, _, _ = run(capsys, "nonsense")
    assert code == 2


def test_module_verify_rank_two(capsys):
    code, out, _ = run(capsys, "module-verify", "--rank2", "L+(r1,r1)")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "PASS"
    assert "calibrated: False" in lines and "irreducible: True" in lines


def test_module_verify_json_and_float(capsys):
    code, out, _ = run(capsys, "module-verify", "--fixture", "10", "--format", "json")
    assert code == 0
    json.loads(out)
    code, out, _ = run(capsys, "module-verify", "--fixture", "10", "--backend", "float")
    assert code == 0 and out.strip().endswith("PASS")


def test_module_build_round_trip(capsys, tmp_path):
    target = tmp_path / "m.json"
    code, _, _ = run(capsys, "module-build", "--c", "1,3", "--r1", "5", "--r2", "7", "--out", str(target))
    assert code == 0
    data = json.loads(target.read_text())
    assert data["dim"] == 8
    code, out, _ = run(capsys, "module-verify", "--input", str(target))
    assert code == 0 and out.strip().endswith("PASS")


def test_module_verify_failure_exit_three(capsys, tmp_path):
    code, out, _ = run(capsys, "module-build", "--fixture", "10")
    data = json.loads(out)
    data["matrices"]["T0"][0][0] = "7"
    target = tmp_path / "bad.json"
    target.write_text(json.dumps(data))
    code, out, _ = run(capsys, "module-verify", "--input", str(target))
    assert code == 3 and out.strip().endswith("FAIL")


def test_module_sources_are_exclusive(capsys):
    code, _, _ = run(capsys, "module-build", "--fixture", "1", "--rank2", "L+(0,1)")
    assert code == 2
    code, _, _ = run(capsys, "module-build")
    assert code == 2


def test_map_lambda(capsys):
    code, out, _ = run(capsys, "map-lambda", "--rect", "5,4,3,3", "--k", "12", "--lambda", "9,9,6,6,6,2,1,1,1")
    assert code == 0
    data = json.loads(out)
    assert data["z_q_exponent"] == 16 and data["z_sign"] == 1
    assert len(data["J"]) == 11 and data["paths"] == 6209280


def test_map_lambda_nongeneric(capsys):
    argv = ["map-lambda", "--rect", "6,6,5,5", "--k", "1", "--lambda", "12,10,8,8,6,6,5,3,3,1"]
    assert run(capsys, *argv)[0] == 2
    code, out, _ = run(capsys, *argv, "--no-check")
    assert code == 0
    data = json.loads(out)
    assert data["c"] == ["11"] and data["J"] == [] and data["z_sign"] == -1


def test_bratteli_formats(capsys):
    code, out, _ = run(capsys, "bratteli", "--rect", "7,5,2,2", "--k", "1", "--format", "dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "bratteli", "--rect", "7,5,2,2", "--k", "1")
    levels = json.loads(out)["levels"]
    assert [len(levels[x]) for x in ("-1", "0", "1")] == [1, 6, 18]


def test_verify_sw(capsys):
    code, out, _ = run(capsys, "verify-sw", "--rect", "2,1,1,1", "--k", "2", "--n", "6")
    assert code == 0
    code, _, _ = run(capsys, "verify-sw", "--rect", "2,1,1,1", "--k", "1", "--modules")
    assert code == 2
    code, _, _ = run(capsys, "verify-sw", "--rect", "6,1,3,1", "--k", "2", "--n", "8", "--modules")
    assert code == 0


def test_direct_parameters(capsys):
    code, _, _ = run(capsys, "module-verify", "--fixture", "0", "--t-half", "3", "--t0-half", "7", "--tk-half", "11")
    assert code == 0
    code, _, _ = run(capsys, "module-verify", "--fixture", "0", "--t-half", "3", "--rect", "6,1,3,1")
    assert code == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("rect = 5,4,3,3\nk = 12\nlambda = 9,9,6,6,6,2,1,1,1\n")
    code, out, _ = run(capsys, "--config", str(cfg), "map-lambda")
    assert code == 0 and json.loads(out)["z_q_exponent"] == 16
    code, out, _ = run(capsys, "--config", str(cfg), "map-lambda", "--q", "3")
    assert code == 0 and json.loads(out)["z"] == str(3 ** 16)


def test_missing_config_file(capsys, tmp_path):
    code, _, _ = run(capsys, "--config", str(tmp_path / "absent.cfg"), "bratteli", "--rect", "7,5,2,2")
    assert code == 2


@pytest.mark.parametrize("argv", [["--help"], ["region", "--help"]])
def test_help(capsys, argv):
    assert main(argv) == 0
