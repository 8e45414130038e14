from pgl3.surface.flips import quadrilateral_labels


def test_q_symbolic_formulas(run_cli, quad):
    labels = quadrilateral_labels(quad, quad.edge_between(0, 2))
    code, out, _ = run_cli("quantum-flip", "--q-symbolic")
    assert code == 0
    assert out["command"] == "quantum-flip"
    result = out["result"]
    assert result["edge"] == "0_2"
    assert len(result["images"]) == 12
    assert "q" in result["images"][labels["A"]]
    assert result["stage"]
    assert set(result["letters"]) == set("ABCDEFGHXYZW")


def test_quantum_flip_at_q_one(run_cli):
    code, out, _ = run_cli("quantum-flip", "--polygon", 4, "--edge", "0_2")
    assert code == 0
    result = out["result"]
    assert result["matches_classical"] is True
    assert len(result["images_at_q1"]) == 12


def test_quantum_flip_matches_flip_quantum(run_cli):
    _, named, _ = run_cli("quantum-flip", "--q-symbolic", "--polygon", 4, "--edge", "0_2")
    _, flagged, _ = run_cli("flip", "--polygon", 4, "--edge", "0_2", "--quantum")
    assert named["result"]["images"] == flagged["result"]["images"]


def test_quantum_flip_needs_an_edge(run_cli):
    code, _, err = run_cli("quantum-flip", "--polygon", 5)
    assert code == 2
    assert "--edge is required" in err
