import pytest

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.mutation import mutate_x, mutation_sequence
from pgl3.cluster.seed import Seed
from pgl3.core.config import settings
from pgl3.core.exceptions import InvalidInputError, RepresentationTooLargeError
from pgl3.quantum.flips import quantum_flip, quantum_flip_chain, quantum_flip_stage
from pgl3.quantum.maps import compose, compose_all, quantum_mutation, specialize_q1
from pgl3.quantum.representation import clock_shift_representation, evaluate
from pgl3.quantum.torus import QLaurent, QTorusElem, ordered_product, qmul, star
from pgl3.quantum.verify import (
    verify_commuting_flips,
    verify_flip_formulas,
    verify_flip_square,
    verify_quantum_pentagon,
)
from pgl3.surface.flips import flip_closed_form, quadrilateral_labels


@pytest.fixture
def pair_seed():
    return Seed.from_entries(["a", "b"], [("a", "b", 1)])


@pytest.fixture
def triple_seed():
    return Seed.from_entries(["a", "b", "c"], [("a", "b", 1), ("b", "c", 2)])


# coefficients and the torus


def test_qlaurent_arithmetic():
    q = QLaurent.q()
    assert (q + 1) * (q - 1) == QLaurent.q(2) - 1
    assert q.star() == QLaurent.q(-1)
    assert (q * 3 + 2).at_one() == 5
    assert str(QLaurent.q(2, -1) + 1) == "-q^2 + 1"


def test_generators_q_commute(pair_seed):
    a = QTorusElem.generator(pair_seed, "a")
    b = QTorusElem.generator(pair_seed, "b")
    assert qmul(a, b) == qmul(b, a) * QLaurent.q(2)
    assert a * a.inverse() == QTorusElem.constant(pair_seed)


def test_star_reverses_products(triple_seed):
    a, b, c = (QTorusElem.generator(triple_seed, n) for n in "abc")
    x = a * QLaurent.q(1) + b
    y = b * c + 1
    assert star(x * y) == star(y) * star(x)
    assert star(a * b) != a * b


def test_ordered_product_specializes(triple_seed):
    word = ordered_product(triple_seed, ["c", "a"])
    a, c = RatFunc.var("a"), RatFunc.var("c")
    assert word.specialize_q1() == a * c


def test_only_monomials_invert(pair_seed):
    a = QTorusElem.generator(pair_seed, "a")
    with pytest.raises(InvalidInputError):
        (1 + a).inverse()


# mutations


def test_quantum_mutation_twice_is_identity(triple_seed):
    for k in triple_seed.vertices:
        first = quantum_mutation(triple_seed, k)
        second = quantum_mutation(first.target, k)
        assert compose(first, second).is_identity()


def test_quantum_mutation_at_q_one(triple_seed):
    for k in triple_seed.vertices:
        assert specialize_q1(quantum_mutation(triple_seed, k)).equals(mutate_x(triple_seed, k))


def test_composite_at_q_one(triple_seed):
    sequence = ["a", "b", "c"]
    maps = []
    seed = triple_seed
    for k in sequence:
        maps.append(quantum_mutation(seed, k))
        seed = maps[-1].target
    assert compose_all(maps).specialize_q1().equals(mutation_sequence(triple_seed, sequence))


# flips


def test_quantum_flip_at_q_one(quad):
    e = quad.edge_between(0, 2)
    assert quantum_flip(quad, e)[1].specialize_q1().equals(flip_closed_form(quad, e)[1])


def test_quantum_flip_chain_shape(quad):
    e = quad.edge_between(0, 2)
    new_tri, chain = quantum_flip_chain(quad, e)
    assert len(chain) == 5
    assert new_tri.diagonals() == {(1, 3)}


def test_first_stage_inverts_the_edge_points(quad):
    e = quad.edge_between(0, 2)
    labels = quadrilateral_labels(quad, e)
    stage = quantum_flip_stage(quad, e)
    classical = stage.specialize_q1()
    assert classical.images[labels["Z"]] == 1 / RatFunc.var(labels["Z"])
    assert classical.images[labels["W"]] == 1 / RatFunc.var(labels["W"])
    assert classical.equals(mutation_sequence(stage.source, [labels["Z"], labels["W"]]))


# representations


def test_clock_shift_relations(pair_seed):
    rep = clock_shift_representation(pair_seed, 5)
    assert rep.dimension == 5
    assert rep.relation_residual() < 1e-9


def test_representation_of_a_mutation(pair_seed):
    rep = clock_shift_representation(pair_seed, 7, twists={"a": 1.5, "b": 0.75})
    images = evaluate(quantum_mutation(pair_seed, "a"), rep)
    assert set(images) == {"a", "b"}
    assert images["a"].shape == (7, 7)


def test_representation_order_must_be_an_odd_prime(pair_seed):
    with pytest.raises(InvalidInputError):
        clock_shift_representation(pair_seed, 4)


def test_representation_cap(pair_seed):
    with pytest.raises(RepresentationTooLargeError):
        clock_shift_representation(pair_seed, 5, cap=4)


def test_flip_formulas_numerically():
    report = verify_flip_formulas(5, trials=2)
    assert report.passed
    assert report.to_dict()["N"] == 5


def test_flip_square_numerically():
    assert verify_flip_square(5, trials=2).passed


@pytest.mark.slow
def test_commuting_flips_numerically():
    assert verify_commuting_flips(5, trials=2).passed


@pytest.mark.slow
@pytest.mark.parametrize("order", [5, 7])
def test_quantum_pentagon(order):
    report = verify_quantum_pentagon(order)
    assert report.trials == settings.QUANTUM_TRIALS == 20
    assert report.passed
