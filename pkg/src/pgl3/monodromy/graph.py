# src/pgl3/monodromy/graph.py
"""The trivalent graph with little triangles and monodromy along its loops.

Inside every triangle sits a little triangle with one vertex next to each
side; its sides carry ``T(X)`` for the center coordinate ``X``. Every internal
edge is crossed by an e-edge carrying ``E(Z, W)``. A loop is a cyclic word of
steps ``(dart, turn)``: leave the current triangle through ``dart`` and, in the
triangle entered, turn counterclockwise (``+1``, factor ``T``) or clockwise
(``-1``, factor ``T^-1``) towards the next side to cross.

Products are taken left to right along the path. Crossing a side running
from P to Q (counterclockwise in the triangle being left) uses ``E(Z, W)`` with
``Z`` the point near P and ``W`` the point near Q.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import networkx as nx

from pgl3.core.exceptions import InvalidInputError
from pgl3.monodromy.matrices import E, Matrix3, T, T_inv, product
from pgl3.surface.marked_points import CenterPoint, head_point, point_name, tail_point
from pgl3.surface.triangulation import Dart, Triangulation, dart_token, edge_of, inv, parse_dart


logger = logging.getLogger(__name__)

Step = Tuple[Dart, int]


@dataclass(frozen=True)
class LoopWord:
    steps: Tuple[Step, ...]

    def __post_init__(self) -> None:
        if not self.steps:
            raise InvalidInputError("a loop needs at least one crossing")
        if any(turn not in (1, -1) for _, turn in self.steps):
            raise InvalidInputError("turns are +1 or -1")

    def rotated(self, k: int) -> "LoopWord":
        k %= len(self.steps)
        return LoopWord(self.steps[k:] + self.steps[:k])

    def rotations(self) -> List["LoopWord"]:
        return [self.rotated(k) for k in range(len(self.steps))]

    def is_boundary(self) -> bool:
        turns = {turn for _, turn in self.steps}
        return len(turns) == 1

    def to_list(self) -> List[list]:
        return [[dart_token(d), turn] for d, turn in self.steps]

    @classmethod
    def from_list(cls, items: Sequence[Sequence]) -> "LoopWord":
        return cls(tuple((parse_dart(d), int(turn)) for d, turn in items))


class MonodromyGraph:
    def __init__(self, tri: Triangulation) -> None:
        self.tri = tri
        self.graph = nx.MultiDiGraph()
        for t, darts in enumerate(tri.triangles):
            x = point_name(tri, CenterPoint(t))
            for i in range(3):
                self.graph.add_node((t, i))
            for i in range(3):
                self.graph.add_edge((t, i), (t, (i + 1) % 3), kind="t", center=x)
        for e in tri.internal_edges():
            here, there = tri.location[e], tri.location[inv(e)]
            self.graph.add_edge(
                here,
                there,
                kind="e",
                edge=tri.edge_name(e),
                z=point_name(tri, tail_point(e)),
                w=point_name(tri, head_point(e)),
            )

    def t_edges(self) -> int:
        return sum(1 for *_, k in self.graph.edges(data="kind") if k == "t")

    def e_edges(self) -> int:
        return sum(1 for *_, k in self.graph.edges(data="kind") if k == "e")

    def fundamental_rank(self) -> int:
        """Rank of the fundamental group once each little triangle is contracted."""
        dual = nx.MultiGraph()
        dual.add_nodes_from(range(len(self.tri.triangles)))
        for u, v, kind in self.graph.edges(data="kind"):
            if kind == "e":
                dual.add_edge(u[0], v[0])
        return dual.number_of_edges() - dual.number_of_nodes() + nx.number_connected_components(dual)

    # loops

    def check_loop(self, loop: LoopWord) -> None:
        tri = self.tri
        steps = loop.steps
        for k, (d, turn) in enumerate(steps):
            if d not in tri.location or not tri.is_internal(edge_of(d)):
                raise InvalidInputError(f"dart {dart_token(d)} cannot be crossed")
            entered = inv(d)
            expected = tri.next_dart(entered) if turn > 0 else tri.prev_dart(entered)
            following = steps[(k + 1) % len(steps)][0]
            if following != expected:
                raise InvalidInputError("loop word is not closed")

    def crossing(self, d: Dart) -> Matrix3:
        tri = self.tri
        return E(point_name(tri, tail_point(d)), point_name(tri, head_point(d)))

    def turn(self, d: Dart, turn: int) -> Matrix3:
        """Turn inside the triangle entered by crossing ``d``."""
        t = self.tri.triangle_of(inv(d))
        x = point_name(self.tri, CenterPoint(t))
        return T(x) if turn > 0 else T_inv(x)

    def factors(self, loop: LoopWord) -> List[Matrix3]:
        self.check_loop(loop)
        result = []
        for d, turn in loop.steps:
            result.append(self.crossing(d))
            result.append(self.turn(d, turn))
        return result

    def monodromy(self, loop: LoopWord) -> Matrix3:
        return product(self.factors(loop))

    def loop_from_edges(self, word: Sequence[str]) -> LoopWord:
        """Loop crossing the named edges in cyclic order; turns follow from the sides."""
        tri = self.tri
        edges = [tri.resolve_edge(w) for w in word]
        if not edges:
            raise InvalidInputError("empty loop word")
        for first in (edges[0], inv(edges[0])):
            steps = self._follow(first, edges)
            if steps is not None:
                return LoopWord(tuple(steps))
        raise InvalidInputError(f"edges {list(word)} do not form a closed loop")

    def _follow(self, first: Dart, edges: List[int]):
        tri = self.tri
        if first not in tri.location or not tri.is_internal(edge_of(first)):
            return None
        steps: List[Step] = []
        d = first
        for k in range(len(edges)):
            entered = inv(d)
            target = edges[(k + 1) % len(edges)]
            options = [
                (nxt, turn)
                for nxt, turn in ((tri.next_dart(entered), 1), (tri.prev_dart(entered), -1))
                if edge_of(nxt) == target
            ]
            if not options:
                return None
            if len(options) > 1:
                raise InvalidInputError(f"edge {tri.edge_name(target)} is ambiguous in this loop")
            nxt, turn = options[0]
            steps.append((d, turn))
            d = nxt
        return steps if d == first else None

    def boundary_loops(self) -> List[LoopWord]:
        """Loops around the punctures, turning counterclockwise throughout."""
        tri = self.tri
        seen = set()
        loops = []
        for d in sorted(tri.location, key=lambda x: (edge_of(x), x < 0)):
            if d in seen or not tri.is_internal(edge_of(d)):
                continue
            steps: List[Step] = []
            current = d
            while True:
                seen.add(current)
                steps.append((current, 1))
                current = tri.next_dart(inv(current))
                if current == d:
                    break
                if not tri.is_internal(edge_of(current)) or current in seen:
                    steps = []
                    break
            if steps:
                loops.append(LoopWord(tuple(steps)))
        return loops


def build_graph(tri: Triangulation) -> MonodromyGraph:
    graph = MonodromyGraph(tri)
    logger.debug("graph with %d t-edges and %d e-edges", graph.t_edges(), graph.e_edges())
    return graph


def monodromy(graph: MonodromyGraph, loop: LoopWord) -> Matrix3:
    return graph.monodromy(loop)
