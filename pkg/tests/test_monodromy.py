import pytest

from pgl3.algebra.positivity import Positivity
from pgl3.algebra.ratfunc import RatFunc
from pgl3.core.exceptions import InvalidInputError
from pgl3.monodromy.graph import LoopWord, build_graph
from pgl3.monodromy.matrices import E, Matrix3, T, T_inv
from pgl3.monodromy.positivity import (
    TPStatus,
    certify_loop,
    certify_total_positivity,
    check_regular_hyperbolic,
    hyperbolicity_check,
)
from pgl3.monodromy.traces import trace_of_power
from pgl3.services.checks import check_trace_positivity


X, Z, W = (RatFunc.var(n) for n in "XZW")


@pytest.fixture(scope="module")
def torus_graph(torus):
    return build_graph(torus)


# matrices


def test_t_cubed_is_scalar():
    assert T(X) ** 3 == Matrix3.identity() * X


def test_t_inverse():
    assert T(X) * T_inv(X) == Matrix3.identity()
    assert T_inv(X) == Matrix3.of([[1, (1 + X) / X, 1 / X], [-1, -1, 0], [1, 0, 0]])


def test_crossing_then_left_turn_is_upper_triangular():
    m = E(Z, W) * T(X)
    assert m == Matrix3.of([[X / Z, (1 + X) / Z, 1 / Z], [0, 1, 1], [0, 0, W]])
    assert m.is_upper_triangular()
    assert m.trace() == X / Z + 1 + W


def test_crossing_then_right_turn_is_lower_triangular():
    m = E(Z, W) * T_inv(X)
    assert m.is_lower_triangular()
    assert m[2, 1] == W * (1 + X) / X


def test_powers_and_specialization():
    m = E(Z, W) * T(X)
    assert m ** -1 * m == Matrix3.identity()
    value = (m**2).specialize({"X": 1, "Z": 1, "W": 1})
    assert value == Matrix3.of([[1, 4, 4], [0, 1, 2], [0, 0, 1]])


# total positivity


def test_upper_triangular_product_is_positive():
    cert = certify_total_positivity(E(Z, W) * T(X), "upper")
    assert cert.status is TPStatus.PASSED
    assert cert.sign == 1


def test_identity_is_not_totally_positive():
    assert certify_total_positivity(Matrix3.identity()).status is TPStatus.FAILED


def test_triangular_hint_is_checked():
    with pytest.raises(InvalidInputError):
        certify_total_positivity(E(Z, W) * T_inv(X), "upper")


def test_regular_hyperbolic():
    assert check_regular_hyperbolic(Matrix3.of([[1, 0, 0], [0, 2, 0], [0, 0, 3]]))
    assert not check_regular_hyperbolic(Matrix3.identity())


def test_specialization_point_must_be_positive():
    with pytest.raises(InvalidInputError):
        check_regular_hyperbolic(E(Z, W) * T(X), {"X": 1, "Z": -1, "W": 1})


# graph and loops


def test_torus_graph_shape(torus_graph):
    assert torus_graph.t_edges() == 6
    assert torus_graph.e_edges() == 3
    assert torus_graph.fundamental_rank() == 2


def test_torus_puncture_loop(torus_graph):
    loops = torus_graph.boundary_loops()
    assert len(loops) == 1
    assert len(loops[0].steps) == 6
    assert certify_loop(torus_graph, loops[0]).status is TPStatus.PASSED


def test_loop_words(torus_graph):
    loop = torus_graph.loop_from_edges(["a", "b"])
    assert len(loop.steps) == 2
    assert LoopWord.from_list(loop.to_list()) == loop
    assert loop.rotated(1).rotated(1) == loop


def test_open_loop_is_rejected(torus_graph):
    loop = torus_graph.loop_from_edges(["a", "b"])
    with pytest.raises(InvalidInputError):
        torus_graph.monodromy(LoopWord(loop.steps[:1]))


def test_trace_of_simple_loop(torus_graph):
    loop = torus_graph.loop_from_edges(["a", "b"])
    result = trace_of_power(torus_graph, loop, 2)
    assert result.certificate.status is Positivity.POSITIVE_LAURENT
    assert result.integral
    assert result.to_dict()["power"] == 2


def test_trace_power_must_be_positive(torus_graph):
    with pytest.raises(ValueError):
        trace_of_power(torus_graph, torus_graph.loop_from_edges(["a", "b"]), 0)


def test_hyperbolic_at_random_points(torus_graph, rng):
    loop = torus_graph.loop_from_edges(["a", "b"])
    report = hyperbolicity_check(torus_graph, loop, samples=5, rng=rng)
    assert report.passed
    assert report.points == 5


def test_trace_positivity_check():
    assert check_trace_positivity(powers=(1, 2)).passed


@pytest.mark.slow
def test_hyperbolic_at_one_hundred_points(torus_graph, rng):
    for word in ("ab", "ac", "bc"):
        loop = torus_graph.loop_from_edges(word)
        report = hyperbolicity_check(torus_graph, loop, samples=100, rng=rng)
        assert report.passed
        assert report.points == 100


@pytest.mark.slow
def test_trace_positivity_up_to_the_cube(rng):
    report = check_trace_positivity(powers=(1, 2, 3), samples=100, rng=rng)
    assert report.passed
    assert {key.split("^")[1] for key in report.details} == {"1", "2", "3"}
