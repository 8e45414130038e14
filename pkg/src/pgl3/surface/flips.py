# src/pgl3/surface/flips.py
"""Coordinate changes of flips.

Around the flipped edge the quadrilateral has corners ``v1 v2 v3 v4``
(counterclockwise, the edge joining v1 and v3). ``A B`` sit on side v1v2,
``C D`` on v2v3, ``E F`` on v3v4 and ``G H`` on v4v1, each listed from the
first corner; ``Z`` and ``W`` are the edge points near v1 and v3, ``X`` and
``Y`` the centers of v1v2v3 and v1v3v4.
"""
import logging
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.mutation import ClusterMap, compose, identity_map, mutation_sequence, relabel
from pgl3.core.config import settings
from pgl3.core.exceptions import (
    FlipNotSupportedError,
    InvalidInputError,
    SearchCapExceededError,
)
from pgl3.surface.epsilon import STANDARD_PATTERN, TrianglePattern, epsilon_of_triangulation
from pgl3.surface.marked_points import (
    CenterPoint,
    EdgePoint,
    all_points,
    head_point,
    point_name,
    tail_point,
)
from pgl3.surface.triangulation import (
    Triangulation,
    _triangles_of_diagonals,
    inv,
    polygon_triangulation,
    quadrilateral,
)


logger = logging.getLogger(__name__)

# pairs of sides whose points would receive opposite factors
CONFLICTS = (("A", "H"), ("B", "C"), ("D", "E"), ("F", "G"))


def quadrilateral_points(tri: Triangulation, e: int) -> Dict[str, object]:
    q = quadrilateral(tri, e)
    points = {
        "A": tail_point(q.c),
        "B": head_point(q.c),
        "C": tail_point(q.d),
        "D": head_point(q.d),
        "E": tail_point(q.a),
        "F": head_point(q.a),
        "G": tail_point(q.b),
        "H": head_point(q.b),
        "X": CenterPoint(q.g_index),
        "Y": CenterPoint(q.f_index),
        "Z": EdgePoint(e, 0),
        "W": EdgePoint(e, 1),
    }
    for first, second in CONFLICTS:
        if points[first] == points[second]:
            raise FlipNotSupportedError(tri.edge_name(e))
    return points


def quadrilateral_labels(tri: Triangulation, e: int) -> Dict[str, str]:
    return {k: point_name(tri, p) for k, p in quadrilateral_points(tri, e).items()}


def _new_positions(tri: Triangulation, e: int, back: bool) -> Dict[str, object]:
    """Where the four exchanged coordinates live after the flip."""
    q = quadrilateral(tri, e)
    if back:
        return {
            "Z": CenterPoint(q.g_index),
            "W": CenterPoint(q.f_index),
            "X": EdgePoint(e, 1),
            "Y": EdgePoint(e, 0),
        }
    return {
        "Z": CenterPoint(q.f_index),
        "W": CenterPoint(q.g_index),
        "X": EdgePoint(e, 0),
        "Y": EdgePoint(e, 1),
    }


def flip_formulas(v: Dict[str, RatFunc]) -> Dict[str, RatFunc]:
    """Images of the twelve quadrilateral coordinates, keyed by position."""
    A, B, C, D, E, F, G, H = (v[k] for k in "ABCDEFGH")
    X, Y, Z, W = v["X"], v["Y"], v["Z"], v["W"]
    pz = 1 + Z + Z * X + Z * X * W
    pw = 1 + W + W * Y + W * Y * Z
    return {
        "A": A * (1 + Z),
        "B": B * pz / (1 + Z),
        "C": C * (1 + W) * X * Z / pz,
        "D": D * W / (1 + W),
        "E": E * (1 + W),
        "F": F * pw / (1 + W),
        "G": G * (1 + Z) * Y * W / pw,
        "H": H * Z / (1 + Z),
        "X": (1 + Z) / (X * Z * (1 + W)),
        "Y": (1 + W) / (Y * W * (1 + Z)),
        "Z": X * pw / pz,
        "W": Y * pz / pw,
    }


def flip_closed_form(
    tri: Triangulation,
    e: int,
    back: bool = False,
    pattern: TrianglePattern = STANDARD_PATTERN,
) -> Tuple[Triangulation, ClusterMap]:
    points = quadrilateral_points(tri, e)
    new_tri = tri.flip(e, back=back)
    symbols = {k: RatFunc.var(point_name(tri, p)) for k, p in points.items()}
    formulas = flip_formulas(symbols)
    # a point shared by several sides collects every factor
    factors: Dict[object, RatFunc] = {}
    for k in "ABCDEFGH":
        p = points[k]
        factors[p] = factors.get(p, RatFunc.const(1)) * formulas[k] / symbols[k]
    moved = _new_positions(tri, e, back)
    replaced = {points[k] for k in "XYZW"}
    images: Dict[str, RatFunc] = {}
    for p in all_points(new_tri):
        if p in replaced:
            continue
        images[point_name(new_tri, p)] = RatFunc.var(point_name(tri, p)) * factors.get(
            p, RatFunc.const(1)
        )
    for k in "XYZW":
        images[point_name(new_tri, moved[k])] = formulas[k]
    source = epsilon_of_triangulation(tri, pattern)
    target = epsilon_of_triangulation(new_tri, pattern)
    logger.debug("closed-form flip at %s", tri.edge_name(e))
    return new_tri, ClusterMap(source, target, images, steps=(f"flip:{tri.edge_name(e)}",))


def flip_via_mutations(
    tri: Triangulation,
    e: int,
    back: bool = False,
    pattern: TrianglePattern = STANDARD_PATTERN,
    order: Sequence[str] = ("Z", "W", "X", "Y"),
) -> Tuple[Triangulation, ClusterMap]:
    """Mutations at Z, W, X and Y followed by the relabeling onto the new triangulation."""
    points = quadrilateral_points(tri, e)
    labels = {k: point_name(tri, p) for k, p in points.items()}
    new_tri = tri.flip(e, back=back)
    seed = epsilon_of_triangulation(tri, pattern)
    mutations = mutation_sequence(seed, [labels[k] for k in order])
    moved = _new_positions(tri, e, back)
    bijection = {}
    for p in all_points(tri):
        bijection[point_name(tri, p)] = point_name(new_tri, p)
    for k in "XYZW":
        bijection[labels[k]] = point_name(new_tri, moved[k])
    return new_tri, compose(mutations, relabel(mutations.target, bijection))


def flip_sequence(
    tri: Triangulation, edges: Iterable, back: bool = False
) -> Tuple[Triangulation, ClusterMap]:
    """Closed-form flips in order; polygon edges may be given as vertex pairs."""
    current = tri
    result = identity_map(epsilon_of_triangulation(tri))
    for token in edges:
        e = _edge(current, token)
        current, step = flip_closed_form(current, e, back=back)
        result = compose(result, step)
    return current, result


def _edge(tri: Triangulation, token) -> int:
    if isinstance(token, tuple):
        return tri.edge_between(*token)
    if isinstance(token, int):
        return token
    return tri.resolve_edge(token)


def commuting_flips(tri: Triangulation, first, second) -> bool:
    """Whether flips at two edges with no common triangle commute as coordinate changes."""
    e1, e2 = _edge(tri, first), _edge(tri, second)
    def touched(e: int) -> set:
        return {tri.triangle_of(e), tri.triangle_of(inv(e))}

    if touched(e1) & touched(e2):
        raise InvalidInputError("flips share a triangle")
    one = flip_sequence(tri, [e1, e2])
    other = flip_sequence(tri, [e2, e1])
    return one[0] == other[0] and one[1].equals(other[1])


# pentagon

PENTAGON_FLIPS: Tuple[Tuple[int, int], ...] = ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def pentagon_sequence(tri: Optional[Triangulation] = None) -> List[Tuple[int, int]]:
    """The five flips returning the fan at vertex 0 of a pentagon to itself."""
    tri = tri or polygon_triangulation(5)
    if tri.polygon != 5 or tri.diagonals() != {(0, 2), (0, 3)}:
        raise InvalidInputError("the pentagon sequence starts from the fan at vertex 0")
    return list(PENTAGON_FLIPS)


def pentagon_map(passes: int = 1) -> Tuple[Triangulation, ClusterMap]:
    tri = polygon_triangulation(5)
    return flip_sequence(tri, pentagon_sequence(tri) * passes)


# flip graph of polygons


def _flip_diagonal(n: int, diagonals: frozenset, d: Tuple[int, int]) -> Tuple[int, int]:
    a, b = d
    third = [
        c
        for t in _triangles_of_diagonals(n, diagonals)
        if a in t and b in t
        for c in t
        if c not in d
    ]
    return tuple(sorted(third))


def flip_path(source: Triangulation, target: Triangulation, cap: Optional[int] = None) -> List[Tuple[int, int]]:
    """Shortest list of diagonals to flip, found by breadth-first search."""
    if source.polygon is None or source.polygon != target.polygon:
        raise InvalidInputError("flip paths are computed between triangulations of one polygon")
    cap = cap or settings.FLIP_GRAPH_CAP
    n = source.polygon
    start, goal = source.diagonals(), target.diagonals()
    parent: Dict[frozenset, Optional[Tuple[frozenset, Tuple[int, int]]]] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            break
        for d in sorted(state):
            new = _flip_diagonal(n, state, d)
            nxt = (state - {d}) | {new}
            if nxt in parent:
                continue
            parent[nxt] = (state, d)
            if len(parent) > cap:
                raise SearchCapExceededError(
                    "flip graph exceeds the configured cap", visited=len(parent), cap=cap
                )
            queue.append(nxt)
    if goal not in parent:
        raise InvalidInputError("target triangulation is not reachable")
    path: List[Tuple[int, int]] = []
    state = goal
    while parent[state] is not None:
        state, d = parent[state]
        path.append(d)
    path.reverse()
    logger.info("flip path of length %d over %d triangulations", len(path), len(parent))
    return path


def transition_map(source: Triangulation, target: Triangulation) -> Tuple[List[Tuple[int, int]], ClusterMap]:
    path = flip_path(source, target)
    _, cmap = flip_sequence(source, path)
    return path, cmap
