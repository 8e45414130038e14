import itertools
import random

import pytest

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.finite_type import (
    classify_finite_type,
    dynkin_seed,
    is_dynkin_orientation,
    mutation_class,
    mutation_class_search,
    parse_dynkin,
)
from pgl3.cluster.mutation import (
    ClusterMap,
    compose,
    identity_map,
    mutate_epsilon,
    mutate_x,
    mutation_sequence,
    relabel,
)
from pgl3.cluster.poisson import check_poisson_preserved, poisson_bracket
from pgl3.cluster.quiver import is_isomorphic, quiver_canonical_form
from pgl3.cluster.seed import Quiver, Seed
from pgl3.core.exceptions import (
    InvalidInputError,
    SearchCapExceededError,
    SeedMismatchError,
    SizeBoundExceededError,
    UnknownVertexError,
)
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.marked_points import interior_names


def random_seed(rng: random.Random, n: int = 5) -> Seed:
    names = [f"v{i}" for i in range(n)]
    entries = [
        (a, b, rng.randint(-2, 2)) for a, b in itertools.combinations(names, 2)
    ]
    return Seed.from_entries(names, [e for e in entries if e[2]])


# seeds


def test_seed_is_skew_symmetric():
    seed = Seed.from_entries(["a", "b", "c"], [("a", "b", 2), ("c", "b", 1)])
    assert seed.eps("a", "b") == 2
    assert seed.eps("b", "a") == -2
    assert seed.eps("b", "c") == -1
    assert seed.eps("a", "c") == 0


def test_seed_from_matrix_requires_skew_symmetry():
    with pytest.raises(InvalidInputError):
        Seed.from_matrix(["a", "b"], [[0, 1], [1, 0]])


def test_seed_rejects_unknown_vertices():
    with pytest.raises(UnknownVertexError):
        Seed(("a",), frozenset({("a", "b", 1)}))


def test_quiver_round_trip():
    seed = Seed.from_entries(["a", "b", "c"], [("a", "b", 2), ("b", "c", 1)])
    quiver = Quiver.from_seed(seed)
    assert quiver.to_seed() == seed
    assert quiver.to_networkx().number_of_edges() == 3


# mutation


def test_mutate_epsilon_flips_incident_signs():
    seed = Seed.from_entries(["1", "2"], [("1", "2", 1)])
    assert mutate_epsilon(seed, "1").eps("1", "2") == -1


@pytest.mark.parametrize("e_kj, expected", [(1, 2), (-1, 0)])
def test_mutate_epsilon_max_clause(e_kj, expected):
    seed = Seed.from_entries(["i", "j", "k"], [("i", "k", 2), ("k", "j", e_kj)])
    assert mutate_epsilon(seed, "k").eps("i", "j") == expected


def test_mutate_epsilon_is_an_involution(rng):
    for _ in range(20):
        seed = random_seed(rng)
        k = rng.choice(seed.vertices)
        assert mutate_epsilon(mutate_epsilon(seed, k), k) == seed


def test_mutate_unknown_vertex():
    seed = Seed.from_entries(["a", "b"], [("a", "b", 1)])
    with pytest.raises(UnknownVertexError):
        mutate_x(seed, "z")


def test_mutate_x_images():
    seed = Seed.from_entries(["i", "j", "k", "l"], [("k", "i", 1), ("j", "k", 2)])
    images = mutate_x(seed, "k").images
    i, j, k, l = (RatFunc.var(n) for n in "ijkl")
    assert images["k"] == 1 / k
    assert images["l"] == l
    assert images["i"] == i * (1 + k)
    assert images["j"] == j / (1 + 1 / k) ** 2


def test_double_mutation_is_identity(rng):
    for _ in range(5):
        seed = random_seed(rng, 4)
        k = rng.choice(seed.vertices)
        assert mutation_sequence(seed, [k, k]).is_identity()


def test_compose_checks_seeds():
    a = Seed.from_entries(["a", "b"], [("a", "b", 1)])
    b = Seed.from_entries(["a", "b"], [("b", "a", 1)])
    with pytest.raises(SeedMismatchError):
        compose(identity_map(a), identity_map(b))


def test_relabel_is_a_permutation():
    seed = Seed.from_entries(["a", "b"], [("a", "b", 1)])
    cmap = relabel(seed, {"a": "b", "b": "a"})
    assert cmap.target.eps("b", "a") == 1
    assert cmap.as_permutation() == {"b": "a", "a": "b"}


# Poisson bracket


def test_poisson_bracket_of_generators():
    seed = Seed.from_entries(["i", "j", "k"], [("i", "j", 1)])
    i, j, k = (RatFunc.var(n) for n in "ijk")
    assert poisson_bracket(seed, i, j, 2) == 2 * i * j
    assert poisson_bracket(seed, i, i, 2) == 0
    assert poisson_bracket(seed, i, j + k, 2) == poisson_bracket(seed, i, j, 2) + poisson_bracket(seed, i, k, 2)


def test_mutations_preserve_the_bracket(rng):
    seed = random_seed(rng, 4)
    for k in seed.vertices:
        assert check_poisson_preserved(mutate_x(seed, k), 2)


def test_squaring_does_not_preserve_the_bracket():
    seed = Seed.from_entries(["i", "j"], [("i", "j", 1)])
    squares = ClusterMap(seed, seed, {v: RatFunc.var(v) ** 2 for v in seed.vertices})
    assert not check_poisson_preserved(squares, 2)
    assert check_poisson_preserved(identity_map(seed), 2)


# canonical labels


def test_relabeled_copy_has_same_label(rng):
    seed = random_seed(rng, 6)
    names = list(seed.vertices)
    shuffled = names[:]
    rng.shuffle(shuffled)
    copy = seed.rename(dict(zip(names, shuffled)))
    assert quiver_canonical_form(copy) == quiver_canonical_form(seed)


def test_opposite_of_asymmetric_quiver_differs():
    seed = Seed.from_entries(["a", "b", "c", "d"], [("a", "b", 1), ("b", "c", 1), ("b", "d", 1)])
    assert not is_isomorphic(seed, seed.opposite())


def test_star_quiver_symmetry():
    star = dynkin_seed("D4")
    centre = "v1"
    leaves = [v for v in star.vertices if v != centre]
    label = quiver_canonical_form(star)
    for perm in itertools.permutations(leaves):
        renamed = star.rename({**dict(zip(leaves, perm)), centre: centre})
        assert quiver_canonical_form(renamed) == label


def test_label_size_bound():
    seed = Seed.from_entries([f"v{i}" for i in range(5)], [])
    with pytest.raises(SizeBoundExceededError):
        quiver_canonical_form(seed, bound=4)


# finite type


def test_parse_dynkin():
    assert parse_dynkin("E7") == ("E", 7)
    assert parse_dynkin("d_4") == ("D", 4)
    with pytest.raises(InvalidInputError):
        parse_dynkin("E9")


def test_single_vertex_reaches_a1_immediately():
    seed = Seed.from_entries(["x"], [])
    result = mutation_class_search(seed, "A1")
    assert result.found
    assert result.sequence == []


def test_dynkin_seed_is_its_own_orientation():
    assert is_dynkin_orientation(dynkin_seed("E7"), "E7")
    assert not is_dynkin_orientation(dynkin_seed("E7"), "A7")


def test_quadrilateral_is_d4(quad):
    seed = epsilon_of_triangulation(quad).restrict(interior_names(quad))
    result = classify_finite_type(seed)
    assert result.found
    assert result.target == "D4"
    endpoint = mutation_sequence(seed, result.sequence).target
    assert is_dynkin_orientation(endpoint, "D4")


def test_quadrilateral_class_is_finite(quad):
    seed = epsilon_of_triangulation(quad).restrict(interior_names(quad))
    stats = mutation_class(seed)
    assert stats.size == mutation_class(dynkin_seed("D4")).size


@pytest.mark.slow
def test_pentagon_is_e7(pentagon):
    seed = epsilon_of_triangulation(pentagon).restrict(interior_names(pentagon))
    result = mutation_class_search(seed, "E7")
    assert result.found
    assert is_dynkin_orientation(mutation_sequence(seed, result.sequence).target, "E7")


def test_search_cap():
    seed = dynkin_seed("D4")
    with pytest.raises(SearchCapExceededError) as exc:
        mutation_class(seed, cap=2)
    assert exc.value.statistics["cap"] == 2


def test_search_depth_limit():
    seed = dynkin_seed("A3")
    result = mutation_class_search(seed.opposite(), "D4", depth_limit=2)
    assert not result.found
    assert result.to_dict()["witness"] == "NOT_FOUND"
