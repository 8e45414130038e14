def test_monodromy_of_a_loop(run_cli):
    code, out, _ = run_cli("monodromy", "--surface", "g1s1", "--loop", "ab")
    assert code == 0
    result = out["result"]
    assert result["fundamental_rank"] == 2
    assert len(result["loops"]) == 1
    assert len(result["loops"][0]["matrix"]) == 3


def test_boundary_monodromy(run_cli):
    code, out, _ = run_cli("monodromy", "--surface", "g1s1", "--boundary")
    assert code == 0
    (loop,) = out["result"]["loops"]
    assert loop["boundary"] is True
    assert loop["total_positivity"]["status"] == "PASSED"


def test_hyperbolicity_samples(run_cli):
    code, out, _ = run_cli("monodromy", "--surface", "g1s1", "--loop", "a,b", "--samples", 3)
    assert code == 0
    assert out["result"]["loops"][0]["hyperbolicity"]["passed"] is True


def test_loop_is_required(run_cli):
    code, _, err = run_cli("monodromy", "--surface", "g1s1")
    assert code == 2
    assert "--loop" in err


def test_trace_of_square(run_cli):
    code, out, _ = run_cli("trace", "--surface", "g1s1", "--loop", "ab", "--power", 2)
    assert code == 0
    result = out["result"]
    assert result["power"] == 2
    assert result["integral"] is True
    assert result["certificate"]["status"] == "POSITIVE_LAURENT"


def test_trace_decomposition(run_cli):
    code, out, _ = run_cli("trace", "--surface", "g1s1", "--loop", "ab", "--decompose")
    assert code == 0
    assert "decomposition" in out["result"]
