import pytest


def test_quadrilateral_is_d4(run_cli):
    code, out, _ = run_cli("classify", "--polygon", 4)
    assert code == 0
    search = out["result"]["search"]
    assert search["found"] is True
    assert search["target"] == "D4"


def test_target_search_with_class_size(run_cli):
    code, out, _ = run_cli("classify", "--polygon", 4, "--target", "D4", "--class-size")
    assert code == 0
    assert out["result"]["search"]["found"] is True
    assert out["result"]["class"]["size"] > 1


def test_search_cap(run_cli):
    code, _, err = run_cli("classify", "--polygon", 4, "--target", "A4", "--cap", 2)
    assert code == 1
    assert "SearchCapExceededError" in err


def test_classify_seed_document(run_cli, input_file):
    path = input_file({"seed": {"vertices": ["x", "y"], "epsilon": [["x", "y", 1]]}})
    code, out, _ = run_cli("--input", path, "classify", "--target", "A2")
    assert code == 0
    assert out["result"]["search"]["witness"] == []


@pytest.mark.slow
def test_pentagon_is_e7(run_cli):
    code, out, _ = run_cli("classify", "--polygon", 5, "--target", "E7")
    assert code == 0
    assert out["result"]["search"]["found"] is True
