import json
import subprocess
import sys

import pytest

from gwci.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), (json.loads(err) if err else None)


def test_generators_degree_one(capsys):
    code, rep, _ = call(capsys, "generators", "powers235_massey", "--degree", "1")
    assert code == 0
    assert len(rep["generators"]) == 3
    assert rep["verified"] == {"cycle": True, "retract_match": True, "sign": -1}


def test_generators_cycle_failure_exits_one(capsys):
    code, rep, _ = call(capsys, "generators", "twisted235", "--degree", "2")
    assert code == 1 and rep["verified"]["cycle"] is False
    code, _, _ = call(capsys, "generators", "twisted235", "--degree", "2", "--verify", "off")
    assert code == 0


@pytest.mark.parametrize("formula", ["retract", "shifted"])
def test_oracle_routes_are_cycles(capsys, formula):
    code, rep, _ = call(capsys, "generators", "twisted235", "--formula", formula)
    assert code == 0 and len(rep["results"]) == 3


def test_check_prop(capsys):
    code, rep, _ = call(capsys, "check-prop", "gmonomial_plane")
    assert code == 0 and rep["condition_holds"] and "condition holds" in rep["message"]
    code, rep, _ = call(capsys, "check-prop", "powers235_massey")
    assert code == 1 and rep["witness"] == "y^16"


def test_expand(capsys):
    code, rep, _ = call(capsys, "expand", "twisted235", "--query", "x^4*y^2+x^2*y^3*z")
    assert code == 0
    res = rep["results"][0]
    assert res["round_trip"] and len(res["expansion"]) == 2


def test_partial_and_d_constant(capsys):
    code, rep, _ = call(capsys, "partial", "powers235_small", "--query", "x^4*y^3", "--index", "1")
    assert code == 0 and rep["results"][0]["partial"] == {"1": "2*x^2*y^3"}
    code, rep, _ = call(capsys, "d-constant", "--degrees", "1,2")
    assert code == 0 and rep["value"] == "1/2"


def test_validate_and_products(capsys):
    code, rep, _ = call(capsys, "validate-resolution", "gmonomial_plane")
    assert code == 0 and rep["gwci"] and rep["ideal_matches_d1"]
    code, rep, _ = call(capsys, "products", "gmonomial_plane", "--degree", "1")
    assert code == 0 and rep["vanish"]
    code, rep, _ = call(capsys, "products", "powers235_massey", "--degree", "1")
    assert code == 1 and not rep["vanish"]


def test_partial_ideal_and_massey(capsys):
    code, rep, _ = call(capsys, "partial-ideal", "gmonomial_plane")
    assert code == 0 and rep["contains_ideal"] and not rep["unit"]
    code, rep, _ = call(capsys, "massey-verify", "powers235_massey", "--max-p", "3")
    assert code == 0 and rep["valid"]


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    code, _, err = call(capsys, "expand", str(bad))
    assert code == 2 and err["error"] == "ProblemError"

    prob = {"ring": {"vars": ["x", "y"]}, "g": ["x", "y"], "queries": ["x^2 + * y"]}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(prob), encoding="utf-8")
    code, _, err = call(capsys, "expand", str(path))
    assert code == 2 and err["error"] == "parse" and err["position"] is not None

    code, _, err = call(capsys, "generators", "powers235_massey", "--degree", "-1")
    assert code == 2 and err["error"] == "DegreeOutOfRange"
    code, _, _ = call(capsys, "expand")
    assert code == 2


def test_not_gwci_is_an_input_error(capsys, tmp_path):
    prob = {"ring": {"vars": ["x"]}, "g": ["x^2"], "resolution": {"ranks": [1, 1], "diffs": [[["x"]]]}}
    path = tmp_path / "p.json"
    path.write_text(json.dumps(prob), encoding="utf-8")
    code, rep, _ = call(capsys, "validate-resolution", str(path))
    assert code == 1 and not rep["gwci"]
    code, _, err = call(capsys, "generators", str(path))
    assert code == 2 and err["error"] == "NotGWCI"


def test_out_file_and_determinism(capsys, tmp_path):
    out = tmp_path / "r.json"
    call(capsys, "generators", "powers235_massey", "--out", str(out))
    first = out.read_text(encoding="utf-8")
    call(capsys, "generators", "powers235_massey", "--out", str(out))
    assert out.read_text(encoding="utf-8") == first
    assert json.loads(first)["formula"] == "main"


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gwci", "d-constant", "--degrees", "3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["value"] == "1/3"
