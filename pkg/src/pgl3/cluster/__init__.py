from pgl3.cluster.finite_type import (
    SearchResult,
    classify_finite_type,
    dynkin_graph,
    dynkin_seed,
    mutation_class,
    mutation_class_search,
)
from pgl3.cluster.mutation import (
    ClusterMap,
    compose,
    compose_all,
    identity_map,
    mutate_epsilon,
    mutate_x,
    mutation_sequence,
    relabel,
)
from pgl3.cluster.poisson import check_poisson_preserved, poisson_bracket
from pgl3.cluster.quiver import quiver_canonical_form
from pgl3.cluster.seed import Quiver, Seed

__all__ = [
    "ClusterMap",
    "Quiver",
    "SearchResult",
    "Seed",
    "check_poisson_preserved",
    "classify_finite_type",
    "compose",
    "compose_all",
    "dynkin_graph",
    "dynkin_seed",
    "identity_map",
    "mutate_epsilon",
    "mutate_x",
    "mutation_class",
    "mutation_class_search",
    "mutation_sequence",
    "poisson_bracket",
    "quiver_canonical_form",
    "relabel",
]
