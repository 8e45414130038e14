import pytest


def test_verify_flip_involution(run_cli):
    code, out, _ = run_cli("verify", "flip-involution", "--polygon", 4)
    assert code == 0
    (check,) = out["result"]["checks"]
    assert check["check"] == "flip-involution"
    assert check["passed"] is True


def test_verify_poisson(run_cli):
    code, out, _ = run_cli("verify", "poisson", "--polygon", 5)
    assert code == 0
    assert out["result"]["checks"][0]["details"]["constant"] == 2


def test_verify_sigma_and_roundtrip(run_cli):
    assert run_cli("verify", "sigma", "--trials", 3)[0] == 0
    assert run_cli("verify", "roundtrip", "--trials", 3)[0] == 0


def test_verify_records_the_seed(run_cli):
    code, out, _ = run_cli("--seed", 11, "verify", "roundtrip", "--trials", 2)
    assert code == 0
    assert out["result"]["seed"] == 11


@pytest.mark.slow
def test_verify_classical_pentagon(run_cli):
    code, out, _ = run_cli("verify", "pentagon", "--classical")
    assert code == 0
    assert out["result"]["checks"][0]["passed"] is True


@pytest.mark.slow
def test_verify_both_pentagons(run_cli):
    code, out, _ = run_cli("verify", "pentagon", "--classical", "--quantum", "--N", 5, "--trials", 1)
    assert code == 0
    assert [c["check"] for c in out["result"]["checks"]] == ["pentagon", "quantum-pentagon"]


@pytest.mark.slow
def test_verify_pentagon_option_reports_residuals(run_cli):
    code, out, _ = run_cli("verify", "--pentagon", "--N", 5, "--N", 7, "--trials", 20)
    assert code == 0
    checks = out["result"]["checks"]
    assert [c["check"] for c in checks] == ["quantum-pentagon", "quantum-pentagon"]
    assert [c["details"]["N"] for c in checks] == [5, 7]
    assert all(c["details"]["trials"] == 20 for c in checks)


def test_verify_needs_a_target(run_cli):
    code, _, err = run_cli("verify")
    assert code == 2
    assert "verify needs a target" in err


def test_conflicting_targets(run_cli):
    code, _, err = run_cli("verify", "sigma", "--pentagon")
    assert code == 2
    assert "conflicting targets" in err


def test_unknown_target(run_cli):
    with pytest.raises(SystemExit) as exc:
        run_cli("verify", "hexagon")
    assert exc.value.code == 2
