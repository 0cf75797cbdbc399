import json
import os
import subprocess
import sys

import jsonschema
import pytest

from qweyl.cli import run
from qweyl.schemas import REPRESENTATION, SCHEMAS

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "data")
GOLDEN = os.path.join(HERE, "golden")


def d(name):
    return os.path.join(DATA, name)


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_CASES = {
    "pidegree_2_4": ["pidegree", "--params", d("p_2_4.json")],
    "pidegree_2_4_factor1": ["pidegree", "--params", d("p_2_4.json"), "--factor", "1"],
    "azumaya_half_alt": ["azumaya", "--params", d("p_minus_one.json"), "--point", d("point_half.json"),
                         "--kind", "alternative"],
    "module_minus_one": ["module", "--params", d("p_minus_one.json"), "--spec", d("module_minus_one.json")],
    "zidentity_minus_one": ["zidentity", "--params", d("p_minus_one.json")],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name, capsys):
    code, out, _ = invoke(capsys, *GOLDEN_CASES[name])
    assert code == 0
    with open(os.path.join(GOLDEN, name + ".json"), encoding="utf-8") as fh:
        assert out == fh.read()


def test_pidegree_value(capsys):
    code, out, _ = invoke(capsys, "pidegree", "--params", d("p_2_4.json"))
    data = json.loads(out)
    assert code == 0 and data["pi_degree"] == 8 and data["oracle_cardinality"] == 64
    code, out, _ = invoke(capsys, "pidegree", "--params", d("p_2_4.json"), "--factor", "2",
                          "--kind", "alternative")
    assert code == 0 and json.loads(out)["pi_degree"] == 2


def test_azumaya_boundary(capsys):
    code, out, _ = invoke(capsys, "azumaya", "--params", d("p_minus_one.json"),
                          "--point", d("point_half.json"), "--kind", "alternative")
    data = json.loads(out)
    assert code == 0 and data["azumaya"] is False
    assert data["chi"] == [{"order": 2, "coeffs": ["0/1"]}]
    code, out, _ = invoke(capsys, "azumaya", "--params", d("p_minus_one.json"), "--point", d("point_one.json"))
    assert json.loads(out)["chi"] == [{"order": 2, "coeffs": ["-3/1"]}]


def test_module_with_transport(capsys):
    code, out, _ = invoke(capsys, "module", "--params", d("p_2_4.json"), "--spec", d("module_2_4.json"),
                          "--to-alternative")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 8 and data["simple"] and data["span_dimension"] == 64
    assert data["torsion"] == ["invertible", "invertible"]
    assert data["character_consistent"]
    assert data["alternative"]["round_trip"] and data["alternative"]["simple"]
    assert all(r["pass"] for r in data["alternative"]["verification"])


def test_module_rep_roundtrip_and_corruption(capsys, tmp_path):
    code, out, _ = invoke(capsys, "module", "--params", d("p_2_4.json"), "--spec", d("module_2_4.json"))
    rep = json.loads(out)["representation"]
    good = tmp_path / "rep.json"
    good.write_text(json.dumps(rep))
    code, out, _ = invoke(capsys, "module", "--params", d("p_2_4.json"), "--rep", str(good))
    assert code == 0 and json.loads(out)["simple"]
    rep["x"][0][0][4] = {"order": 4, "coeffs": ["5/1", "0/1"]}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rep))
    code, out, _ = invoke(capsys, "module", "--params", d("p_2_4.json"), "--rep", str(bad))
    data = json.loads(out)
    assert code == 2
    failed = [r for r in data["verification"] if not r["pass"]]
    assert failed and failed[0]["witness_index"] >= 0


@pytest.mark.parametrize("argv,code,message", [
    (["validate", "--params", "p_bad_chain.json"], 1, "divisibility chain violated"),
    (["validate", "--params", "p_bad_lambda.json"], 1, "lambda_12"),
    (["validate", "--params", "broken.json"], 1, "invalid JSON"),
    (["validate", "--params", "missing.json"], 3, "No such file"),
    (["validate"], 1, "--params is required"),
    (["module", "--params", "p_minus_one.json", "--spec", "module_bad_mu.json"], 1, "[mu]"),
    (["module", "--params", "p_minus_one.json"], 1, "--spec or --rep"),
    (["azumaya", "--params", "p_2_4.json", "--point", "point_one.json"], 1, "coordinates"),
    (["zidentity", "--params", "p_2_4.json", "--max-degree", "4"], 1, "max-degree"),
    (["pidegree", "--params", "p_2_4.json", "--factor", "3"], 1, "out of range"),
])
def test_exit_codes(argv, code, message, capsys):
    argv = [d(a) if a.endswith(".json") else a for a in argv]
    got, out, err = invoke(capsys, *argv)
    assert got == code
    assert message in err


def test_bad_usage_is_input_error(capsys):
    assert run(["frobnicate"]) == 1
    assert run(["pidegree", "--kind", "weyl"]) == 1


def test_unwritable_output(capsys, tmp_path):
    target = tmp_path / "missing" / "out.json"
    assert run(["validate", "--params", d("p_2_4.json"), "--out", str(target)]) == 3


def test_out_file_matches_stdout(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert run(["pidegree", "--params", d("p_2_4.json"), "--out", str(target)]) == 0
    _, out, _ = invoke(capsys, "pidegree", "--params", d("p_2_4.json"))
    assert target.read_text() == out


ALL_COMMANDS = {
    "validate": ["--params", d("p_2_4.json")],
    "pidegree": ["--params", d("p_2_4.json")],
    "relations": ["--params", d("p_2_4.json"), "--samples", "3"],
    "module": ["--params", d("p_2_4.json"), "--spec", d("module_2_4.json"), "--to-alternative"],
    "azumaya": ["--params", d("p_minus_one.json"), "--point", d("point_one.json")],
    "center": ["--params", d("p_2_4.json"), "--kind", "alternative"],
    "zidentity": ["--params", d("p_2_4.json")],
}


@pytest.mark.parametrize("command", sorted(ALL_COMMANDS))
def test_schema_and_stability(command, capsys):
    code1, out1, _ = invoke(capsys, command, *ALL_COMMANDS[command])
    code2, out2, _ = invoke(capsys, command, *ALL_COMMANDS[command])
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    jsonschema.validate(data, SCHEMAS[command])
    assert out1 == json.dumps(data, sort_keys=True, indent=2) + "\n"
    if command == "module":
        jsonschema.validate(data["alternative"]["representation"], REPRESENTATION)


def test_seed_changes_samples_only(capsys):
    base = ["relations", "--params", d("p_2_4.json"), "--samples", "4"]
    _, a, _ = invoke(capsys, *base, "--seed", "1")
    _, b, _ = invoke(capsys, *base, "--seed", "1")
    assert a == b and json.loads(a)["associativity"]["seed"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qweyl", "pidegree", "--params", d("p_minus_one.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pi_degree"] == 2
