# src/pgl3/cluster/seed.py
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple

import networkx as nx

from pgl3.core.exceptions import InvalidInputError, UnknownVertexError


Arrow = Tuple[str, str, int]


@dataclass(frozen=True)
class Seed:
    """Index set with a skew-symmetric integer function.

    ``arrows`` holds ``(i, j, v)`` for every pair with ``eps(i, j) = v > 0``.
    """

    vertices: Tuple[str, ...]
    arrows: FrozenSet[Arrow]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInputError("duplicate vertex names in seed")
        known = set(self.vertices)
        seen = set()
        for i, j, v in self.arrows:
            if i not in known:
                raise UnknownVertexError(i)
            if j not in known:
                raise UnknownVertexError(j)
            if i == j or v <= 0:
                raise InvalidInputError(f"invalid arrow {i} -> {j} of weight {v}")
            pair = frozenset((i, j))
            if pair in seen:
                raise InvalidInputError(f"pair {i}, {j} listed twice")
            seen.add(pair)

    @classmethod
    def from_entries(
        cls, vertices: Sequence[str], entries: Iterable[Tuple[str, str, int]]
    ) -> "Seed":
        """Build from arbitrary (i, j, eps_ij) entries, accumulating repeats."""
        table: Dict[Tuple[str, str], int] = {}
        for i, j, v in entries:
            if i == j:
                raise InvalidInputError(f"diagonal entry at {i}")
            table[(i, j)] = table.get((i, j), 0) + v
            table[(j, i)] = table.get((j, i), 0) - v
        arrows = frozenset((i, j, v) for (i, j), v in table.items() if v > 0)
        return cls(tuple(vertices), arrows)

    @classmethod
    def from_matrix(cls, vertices: Sequence[str], matrix: Sequence[Sequence[int]]) -> "Seed":
        n = len(vertices)
        for a in range(n):
            for b in range(n):
                if matrix[a][b] != -matrix[b][a]:
                    raise InvalidInputError("matrix is not skew-symmetric")
        entries = [
            (vertices[a], vertices[b], matrix[a][b])
            for a in range(n)
            for b in range(n)
            if matrix[a][b] > 0
        ]
        return cls(tuple(vertices), frozenset(entries))

    @cached_property
    def table(self) -> Dict[str, Dict[str, int]]:
        rows: Dict[str, Dict[str, int]] = {v: {} for v in self.vertices}
        for i, j, v in self.arrows:
            rows[i][j] = v
            rows[j][i] = -v
        return rows

    def eps(self, i: str, j: str) -> int:
        return self.table[i].get(j, 0)

    def check_vertex(self, k: str) -> None:
        if k not in self.table:
            raise UnknownVertexError(k)

    def neighbors(self, k: str) -> Mapping[str, int]:
        self.check_vertex(k)
        return self.table[k]

    def matrix(self) -> List[List[int]]:
        return [[self.eps(i, j) for j in self.vertices] for i in self.vertices]

    def restrict(self, vertices: Iterable[str]) -> "Seed":
        keep = [v for v in self.vertices if v in set(vertices)]
        for v in vertices:
            self.check_vertex(v)
        kept = set(keep)
        return Seed(
            tuple(keep),
            frozenset(a for a in self.arrows if a[0] in kept and a[1] in kept),
        )

    def opposite(self) -> "Seed":
        return Seed(self.vertices, frozenset((j, i, v) for i, j, v in self.arrows))

    def rename(self, bijection: Mapping[str, str]) -> "Seed":
        return Seed(
            tuple(bijection[v] for v in self.vertices),
            frozenset((bijection[i], bijection[j], v) for i, j, v in self.arrows),
        )

    def same_as(self, other: "Seed") -> bool:
        """Equal as functions, ignoring vertex order."""
        return set(self.vertices) == set(other.vertices) and self.arrows == other.arrows

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "epsilon": [[i, j, v] for i, j, v in sorted(self.arrows)],
        }


@dataclass(frozen=True)
class Quiver:
    """Arrow view of a seed: ``eps(i, j)`` arrows from i to j when positive."""

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]

    @classmethod
    def from_seed(cls, seed: Seed) -> "Quiver":
        return cls(seed.vertices, tuple(sorted(seed.arrows)))

    def to_seed(self) -> Seed:
        return Seed(self.vertices, frozenset(self.arrows))

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.vertices)
        for i, j, v in self.arrows:
            for _ in range(v):
                graph.add_edge(i, j)
        return graph

    def underlying_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((i, j) for i, j, _ in self.arrows)
        return graph
