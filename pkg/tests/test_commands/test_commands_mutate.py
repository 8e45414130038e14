import pytest


@pytest.fixture
def seed_document():
    return {"seed": {"vertices": ["a", "b"], "epsilon": [["a", "b", 1]]}}


def test_mutate_twice_is_identity(run_cli, input_file, seed_document):
    path = input_file(seed_document)
    code, out, _ = run_cli("--input", path, "mutate", "--at", "a", "--at", "a", "--check-poisson")
    assert code == 0
    assert out["result"]["images"] == {"a": "a", "b": "b"}
    assert out["result"]["poisson_preserved"] is True


def test_mutate_flips_the_arrow(run_cli, input_file, seed_document):
    code, out, _ = run_cli("--input", input_file(seed_document), "mutate", "--at", "b")
    assert code == 0
    assert out["result"]["seed"]["epsilon"] == [["b", "a", 1]]


def test_quantum_mutation(run_cli, input_file, seed_document):
    code, out, _ = run_cli("--input", input_file(seed_document), "mutate", "--at", "a", "--quantum")
    assert code == 0
    assert out["result"]["star_equivariant"] is True
    assert set(out["result"]["images"]) == {"a", "b"}


def test_mutate_triangulation_seed(run_cli):
    code, out, _ = run_cli("mutate", "--polygon", 4, "--at", "edge:0_2:near:0")
    assert code == 0
    assert len(out["result"]["images"]) == 12


def test_unknown_vertex(run_cli, input_file, seed_document):
    code, _, err = run_cli("--input", input_file(seed_document), "mutate", "--at", "z")
    assert code == 2
    assert "UnknownVertexError" in err


def test_malformed_seed_document(run_cli, input_file):
    path = input_file({"seed": {"vertices": ["1a"]}})
    code, _, err = run_cli("--input", path, "mutate", "--at", "1a")
    assert code == 2
    assert "malformed input document" in err
