# src/pgl3/cluster/mutation.py
import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from pgl3.algebra.ratfunc import RatFunc, substitute
from pgl3.cluster.seed import Seed
from pgl3.core.exceptions import InvalidInputError, SeedMismatchError


logger = logging.getLogger(__name__)


def mutate_epsilon(seed: Seed, k: str) -> Seed:
    seed.check_vertex(k)
    row_k = seed.table[k]
    entries = []
    for i, j, v in seed.arrows:
        if k in (i, j):
            entries.append((j, i, v))
    updated: Dict[Tuple[str, str], int] = {}
    for i, j, v in seed.arrows:
        if k not in (i, j):
            updated[(i, j)] = v
            updated[(j, i)] = -v
    # i -> k -> j adds e_ik * e_kj arrows from i to j
    for i, e_ki in row_k.items():
        for j, e_kj in row_k.items():
            e_ik = -e_ki
            if i == j or e_ik <= 0 or e_kj <= 0:
                continue
            updated[(i, j)] = updated.get((i, j), 0) + e_ik * e_kj
            updated[(j, i)] = updated.get((j, i), 0) - e_ik * e_kj
    for (i, j), v in updated.items():
        if v > 0:
            entries.append((i, j, v))
    return Seed(seed.vertices, frozenset(entries))


@dataclass(frozen=True)
class ClusterMap:
    """Coordinate change from ``source`` to ``target``.

    ``images[v]`` expresses the target coordinate ``v`` through the source
    coordinates. ``bijection`` records a vertex relabeling when the map is a
    seed isomorphism; ``steps`` records how the map was built.
    """

    source: Seed
    target: Seed
    images: Mapping[str, RatFunc]
    bijection: Optional[Tuple[Tuple[str, str], ...]] = None
    steps: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if set(self.images) != set(self.target.vertices):
            raise InvalidInputError("images must cover the target vertices")

    def image(self, v: str) -> RatFunc:
        return self.images[v]

    def pullback(self, expr: RatFunc) -> RatFunc:
        """Rewrite an expression in target coordinates through source coordinates."""
        return substitute(expr, self.images)

    def equals(self, other: "ClusterMap") -> bool:
        if not self.source.same_as(other.source) or not self.target.same_as(other.target):
            return False
        return all(self.images[v] == other.images[v] for v in self.target.vertices)

    def is_identity(self) -> bool:
        return set(self.source.vertices) == set(self.target.vertices) and all(
            self.images[v] == RatFunc.var(v) for v in self.target.vertices
        )

    def as_permutation(self) -> Optional[Dict[str, str]]:
        """``{target vertex: source vertex}`` when every image is a bare variable."""
        result: Dict[str, str] = {}
        for v in self.target.vertices:
            img = self.images[v]
            names = img.variables
            if len(names) != 1 or img != RatFunc.var(names[0]):
                return None
            result[v] = names[0]
        return result

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "images": {v: str(self.images[v]) for v in self.target.vertices},
            "steps": list(self.steps),
        }


def identity_map(seed: Seed) -> ClusterMap:
    return ClusterMap(seed, seed, {v: RatFunc.var(v) for v in seed.vertices})


def mutate_x(seed: Seed, k: str) -> ClusterMap:
    seed.check_vertex(k)
    x_k = RatFunc.var(k)
    images: Dict[str, RatFunc] = {}
    for i in seed.vertices:
        x_i = RatFunc.var(i)
        if i == k:
            images[i] = x_k.inverse()
            continue
        e_ik = seed.eps(i, k)
        if e_ik == 0:
            images[i] = x_i
        elif e_ik < 0:
            images[i] = x_i * (1 + x_k) ** (-e_ik)
        else:
            images[i] = x_i * (1 + x_k.inverse()) ** (-e_ik)
    logger.debug("mutation at %s over %d vertices", k, len(seed.vertices))
    return ClusterMap(seed, mutate_epsilon(seed, k), images, steps=(f"mutate:{k}",))


def compose(first: ClusterMap, second: ClusterMap) -> ClusterMap:
    """Apply ``first`` and then ``second``."""
    if not first.target.same_as(second.source):
        raise SeedMismatchError("maps are not composable: seeds differ")
    images = {v: substitute(img, first.images) for v, img in second.images.items()}
    return ClusterMap(
        first.source,
        second.target,
        images,
        steps=first.steps + second.steps,
    )


def compose_all(maps) -> ClusterMap:
    maps = list(maps)
    result = maps[0]
    for m in maps[1:]:
        result = compose(result, m)
    return result


def relabel(seed: Seed, bijection: Mapping[str, str]) -> ClusterMap:
    """Seed isomorphism sending vertex ``v`` to ``bijection[v]``."""
    for v in seed.vertices:
        seed.check_vertex(v)
    if set(bijection) != set(seed.vertices):
        raise InvalidInputError("bijection must be defined on every vertex")
    if len(set(bijection.values())) != len(bijection):
        raise InvalidInputError("relabeling is not injective")
    target = seed.rename(bijection)
    images = {bijection[v]: RatFunc.var(v) for v in seed.vertices}
    return ClusterMap(
        seed,
        target,
        images,
        bijection=tuple(sorted(bijection.items())),
        steps=("relabel",),
    )


def mutation_sequence(seed: Seed, sequence) -> ClusterMap:
    result = identity_map(seed)
    for k in sequence:
        result = compose(result, mutate_x(result.target, k))
    return result
