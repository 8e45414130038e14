import json


def test_triangulate_torus(run_cli):
    code, out, _ = run_cli("triangulate", "--surface", "g1s1")
    assert code == 0
    assert out["command"] == "triangulate"
    result = out["result"]
    assert result["coordinates"] == 8
    assert result["expected_coordinates"] == 8
    assert result["frozen"] == []
    assert result["triangulation"]["genus"] == 1


def test_triangulate_polygon(run_cli):
    code, out, _ = run_cli("triangulate", "--polygon", 5, "--diagonals", "1_3,1_4")
    assert code == 0
    result = out["result"]
    assert len(result["interior"]) == 7
    assert len(result["frozen"]) == 10
    assert "edge:1_3:near:1" in result["interior"]


def test_triangulate_with_bootstrap(run_cli):
    code, out, _ = run_cli("triangulate", "--polygon", 4, "--bootstrap")
    assert code == 0
    assert out["result"]["bootstrap"]["pattern"]["center_tail"] == -1


def test_config_is_echoed(run_cli):
    code, out, _ = run_cli("--seed", 7, "--poisson-constant", 1, "triangulate", "--polygon", 3)
    assert code == 0
    assert out["config"]["RNG_SEED"] == 7
    assert out["config"]["POISSON_CONSTANT"] == 1


def test_triangulation_from_input_document(run_cli, input_file):
    path = input_file({"triangulation": {"farey_depth": 0}})
    code, out, _ = run_cli("--input", path, "triangulate")
    assert code == 0
    assert out["result"]["triangulation"]["values"] == ["-1", "0", "1", "inf"]


def test_output_directory(run_cli, tmp_path):
    target = tmp_path / "artifacts"
    code, out, _ = run_cli("--output", target, "triangulate", "--polygon", 4)
    assert code == 0
    assert out == ""
    written = json.loads((target / "triangulate.json").read_text())
    assert written["result"]["coordinates"] == 12


def test_bad_surface_name(run_cli):
    code, _, err = run_cli("triangulate", "--surface", "torus")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["type"] == "InvalidInputError"


def test_missing_triangulation(run_cli):
    code, _, err = run_cli("triangulate")
    assert code == 2
    assert "no triangulation given" in err


def test_crossing_diagonals(run_cli):
    code, _, err = run_cli("triangulate", "--polygon", 4, "--diagonals", "0_2,1_3")
    assert code == 2
    assert "InvalidTriangulationError" in err


def test_invalid_option_value(run_cli):
    code, _, err = run_cli("--jobs", 0, "triangulate", "--polygon", 4)
    assert code == 2
    assert "invalid option" in err


def test_missing_input_file(run_cli, tmp_path):
    code, _, err = run_cli("--input", tmp_path / "absent.json", "triangulate")
    assert code == 2
    assert "not found" in err
