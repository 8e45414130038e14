# src/pgl3/surface/epsilon.py
"""The skew-symmetric function of a triangulation.

Each triangle contributes the same local pattern on its seven points: the
center and the tail/head points of its three sides. Contributions of the two
triangles sharing an edge add up. The pattern is written as one value per
rotation orbit of point pairs, for sides ``s_i`` running counterclockwise.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from pgl3.algebra.ratfunc import sort_variables
from pgl3.cluster.seed import Seed
from pgl3.core.exceptions import CheckFailedError
from pgl3.surface.marked_points import (
    CenterPoint,
    all_points,
    head_point,
    point_name,
    tail_point,
)
from pgl3.surface.triangulation import Triangulation, polygon_triangulation


logger = logging.getLogger(__name__)

ORBITS = ("center_tail", "center_head", "corner", "tails", "heads", "tail_head")


@dataclass(frozen=True)
class TrianglePattern:
    """Values of eps on one representative pair of each rotation orbit.

    ``center_tail``: (center, tail of s_i); ``center_head``: (center, head of
    s_i); ``corner``: (head of s_i, tail of s_i+1); ``tails``: (tail of s_i,
    tail of s_i+1); ``heads``: (head of s_i, head of s_i+1); ``tail_head``:
    (tail of s_i, head of s_i+1). The pair (tail, head) of one side is zero.
    """

    center_tail: int = -1
    center_head: int = 1
    corner: int = 1
    tails: int = 0
    heads: int = 0
    tail_head: int = 0

    def negated(self) -> "TrianglePattern":
        return TrianglePattern(*(-getattr(self, o) for o in ORBITS))

    def to_dict(self) -> Dict[str, int]:
        return {o: getattr(self, o) for o in ORBITS}

    def contributions(self, tri: Triangulation, t: int) -> Iterator[Tuple[object, object, int]]:
        sides = tri.triangles[t]
        center = CenterPoint(t)
        for i in range(3):
            s, nxt = sides[i], sides[(i + 1) % 3]
            pairs = (
                (center, tail_point(s), self.center_tail),
                (center, head_point(s), self.center_head),
                (head_point(s), tail_point(nxt), self.corner),
                (tail_point(s), tail_point(nxt), self.tails),
                (head_point(s), head_point(nxt), self.heads),
                (tail_point(s), head_point(nxt), self.tail_head),
            )
            for p, q, v in pairs:
                if v:
                    yield p, q, v


STANDARD_PATTERN = TrianglePattern()


def epsilon_of_triangulation(
    tri: Triangulation, pattern: TrianglePattern = STANDARD_PATTERN
) -> Seed:
    names = {p: point_name(tri, p) for p in all_points(tri)}
    entries: List[Tuple[str, str, int]] = []
    for t in range(len(tri.triangles)):
        for p, q, v in pattern.contributions(tri, t):
            if p == q:
                continue
            entries.append((names[p], names[q], v))
    return Seed.from_entries(sort_variables(names.values()), entries)


# Entries of the quadrilateral seed incident to the diagonal points, as they
# are read off the closed-form flip: the mutations at Z and W act on A, D, E,
# H, X and Y alone.
QUADRILATERAL_ENTRIES: Dict[Tuple[str, str], int] = {
    ("A", "Z"): -1,
    ("H", "Z"): 1,
    ("X", "Z"): 1,
    ("Y", "Z"): -1,
    ("D", "W"): 1,
    ("E", "W"): -1,
    ("X", "W"): -1,
    ("Y", "W"): 1,
    ("Z", "W"): 0,
}


@dataclass(frozen=True)
class BootstrapResult:
    pattern: TrianglePattern
    candidates: int
    survivors: Tuple[TrianglePattern, ...]

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.to_dict(),
            "candidates": self.candidates,
            "survivors": [p.to_dict() for p in self.survivors],
        }


def _matches(seed: Seed, labels: Dict[str, str], sign: int) -> bool:
    letters = set("ABCDEFGHXY")
    for target in ("Z", "W"):
        for other in letters | {"Z", "W"}:
            if other == target:
                continue
            expected = QUADRILATERAL_ENTRIES.get(
                (other, target), -QUADRILATERAL_ENTRIES.get((target, other), 0)
            )
            if seed.eps(labels[other], labels[target]) != sign * expected:
                return False
    return True


def bootstrap_pattern(check_flip: bool = True) -> BootstrapResult:
    """Search all patterns with entries in {-1, 0, 1} for the one the flip forces.

    Candidates must reproduce the diagonal-incident entries of the
    quadrilateral up to a global sign; the sign is fixed by eps(A, Z) = -1.
    With ``check_flip`` the survivor must also make the four-mutation flip
    agree with the closed-form flip.
    """
    from pgl3.surface.flips import flip_closed_form, flip_via_mutations, quadrilateral_labels

    quad = polygon_triangulation(4)
    e = quad.internal_edges()[0]
    labels = quadrilateral_labels(quad, e)
    survivors = []
    count = 0
    for values in itertools.product((-1, 0, 1), repeat=len(ORBITS)):
        count += 1
        pattern = TrianglePattern(*values)
        seed = epsilon_of_triangulation(quad, pattern)
        if _matches(seed, labels, 1) or _matches(seed, labels, -1):
            survivors.append(pattern)
    logger.info("bootstrap: %d of %d patterns match the diagonal entries", len(survivors), count)
    chosen: Optional[TrianglePattern] = None
    for pattern in survivors:
        seed = epsilon_of_triangulation(quad, pattern)
        if seed.eps(labels["A"], labels["Z"]) == -1:
            chosen = pattern
    if len(survivors) != 2 or chosen is None:
        raise CheckFailedError(
            "bootstrap did not single out one pattern up to sign",
            witness=[p.to_dict() for p in survivors],
        )
    if check_flip:
        closed = flip_closed_form(quad, e, pattern=chosen)[1]
        composite = flip_via_mutations(quad, e, pattern=chosen)[1]
        if not closed.equals(composite):
            raise CheckFailedError("bootstrapped pattern does not reproduce the flip")
    return BootstrapResult(chosen, count, tuple(survivors))
