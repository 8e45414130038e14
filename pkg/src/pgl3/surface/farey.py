# src/pgl3/surface/farey.py
"""Finite pieces of the Farey triangulation and flips inside them."""
import logging
from dataclasses import replace
from fractions import Fraction
from math import gcd
from typing import List, Set, Tuple

from pgl3.cluster.mutation import ClusterMap
from pgl3.core.exceptions import InvalidInputError
from pgl3.surface.flips import flip_closed_form
from pgl3.surface.triangulation import Triangulation, polygon_triangulation


logger = logging.getLogger(__name__)

Slope = Tuple[int, int]

ZERO: Slope = (0, 1)
INFINITY: Slope = (1, 0)


def normalize(p: int, q: int) -> Slope:
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    g = gcd(p, q)
    return p // g, q // g


def slope_label(s: Slope) -> str:
    p, q = s
    if q == 0:
        return "inf"
    return str(p) if q == 1 else f"{p}/{q}"


def _sort_key(s: Slope):
    p, q = s
    return (1, Fraction(0)) if q == 0 else (0, Fraction(p, q))


def _neighbors(u: Slope, v: Slope) -> Tuple[Slope, Slope]:
    (p, q), (r, s) = u, v
    return normalize(p + r, q + s), normalize(p - r, q - s)


def farey_triangles(depth: int) -> List[frozenset]:
    """Farey triangles within ``depth`` steps of the edge from 0 to infinity."""
    if depth < 0:
        raise InvalidInputError("depth must be nonnegative")
    triangles: List[frozenset] = []
    frontier = [((ZERO, INFINITY), None)]
    for _ in range(depth + 1):
        next_frontier = []
        for (u, v), inner in frontier:
            for w in _neighbors(u, v):
                if w == inner:
                    continue
                triangles.append(frozenset((u, v, w)))
                next_frontier += [((u, w), v), ((w, v), u)]
        frontier = next_frontier
    return triangles


def farey_window(depth: int) -> Triangulation:
    triangles = farey_triangles(depth)
    slopes: Set[Slope] = set().union(*triangles)
    order = sorted(slopes, key=_sort_key)
    index = {s: i for i, s in enumerate(order)}
    n = len(order)
    edges = {}
    for t in triangles:
        for u in t:
            for v in t:
                if index[u] < index[v]:
                    pair = (index[u], index[v])
                    edges[pair] = edges.get(pair, 0) + 1
    diagonals = [pair for pair, count in edges.items() if count == 2]
    logger.debug("Farey window of depth %d has %d vertices", depth, n)
    return polygon_triangulation(
        n,
        diagonals,
        vertex_values=tuple(slope_label(s) for s in order),
        distinguished=(index[ZERO], index[INFINITY]),
    )


def thompson_flip(window: Triangulation, edge) -> Tuple[Triangulation, ClusterMap]:
    """Flip inside a window, moving the distinguished edge along when it is flipped."""
    e = window.resolve_edge(edge) if not isinstance(edge, int) else edge
    new_tri, cmap = flip_closed_form(window, e)
    if window.distinguished and set(window.edge_ends(e)) == set(window.distinguished):
        new_tri = replace(new_tri, distinguished=new_tri.edge_ends(e))
        logger.info("distinguished edge moved to %s", new_tri.distinguished)
    return new_tri, cmap
