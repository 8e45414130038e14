def test_reconstruct_from_document(run_cli, input_file, kite_coordinates):
    values = {k: str(v) for k, v in kite_coordinates.items()}
    path = input_file({"triangulation": {"polygon": 4}, "coordinates": {"values": values}})
    code, out, _ = run_cli("--input", path, "reconstruct")
    assert code == 0
    result = out["result"]
    assert result["coordinates"] == values
    assert result["convex_inscribed"] is True
    assert len(result["polygon_pair"]["points"]) == 4


def test_reconstruct_random(run_cli):
    code, out, _ = run_cli("reconstruct", "--polygon", 6, "--random")
    assert code == 0
    assert out["result"]["convex_inscribed"] is True


def test_coordinates_of_a_given_pair(run_cli, input_file, kite):
    path = input_file({"polygon_pair": kite.to_dict()})
    code, out, _ = run_cli("--input", path, "reconstruct")
    assert code == 0
    assert out["result"]["coordinates"]["tri:0_1_2:center"] == "3/2"


def test_conic(run_cli):
    code, out, _ = run_cli("reconstruct", "--conic=-1,0,1,2")
    assert code == 0
    assert out["result"]["convex_inscribed"] is True


def test_bad_conic_parameters(run_cli):
    code, _, err = run_cli("reconstruct", "--conic", "a,b,c")
    assert code == 2
    assert "rationals" in err


def test_non_positive_coordinates(run_cli, input_file, kite_coordinates):
    values = {k: str(v) for k, v in kite_coordinates.items()}
    values["edge:0_2:near:2"] = "-1"
    path = input_file({"triangulation": {"polygon": 4}, "coordinates": {"values": values}})
    code, _, err = run_cli("--input", path, "reconstruct")
    assert code == 2
    assert "NonPositiveInputError" in err


def test_render(run_cli, input_file, kite_coordinates):
    values = {k: str(v) for k, v in kite_coordinates.items()}
    path = input_file({"triangulation": {"polygon": 4}, "coordinates": {"values": values}})
    code, out, _ = run_cli("--input", path, "render", "--size", 120)
    assert code == 0
    assert out.startswith("<svg")
    assert 'width="120"' in out


def test_render_needs_a_pair(run_cli):
    code, _, err = run_cli("render")
    assert code == 2
    assert "render needs" in err
