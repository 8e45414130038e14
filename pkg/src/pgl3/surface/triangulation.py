# src/pgl3/surface/triangulation.py
"""Ideal triangulations as triangles of oriented half-edges ("darts").

Edge ``e`` has the darts ``e`` and ``~e = -e - 1``. A triangle is a
counterclockwise triple of darts, each dart running from one corner to the
next. ``tails`` records the vertex every dart starts at. Polygons keep their
boundary edges; only the dart on the polygon side of a boundary edge belongs
to a triangle.
"""
import itertools
import logging
import string
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pgl3.core.exceptions import (
    FlipNotSupportedError,
    InvalidInputError,
    InvalidTriangulationError,
)


logger = logging.getLogger(__name__)

Dart = int
Triangle = Tuple[Dart, Dart, Dart]


def inv(d: Dart) -> Dart:
    return -d - 1


def edge_of(d: Dart) -> int:
    return d if d >= 0 else -d - 1


def dart_token(d: Dart) -> str:
    return str(d) if d >= 0 else f"~{edge_of(d)}"


def parse_dart(token) -> Dart:
    if isinstance(token, int):
        return token
    token = str(token).strip()
    if token.startswith("~"):
        return inv(int(token[1:]))
    return int(token)


def _rotate(triangle: Triangle, d: Dart) -> Triangle:
    i = triangle.index(d)
    return triangle[i:] + triangle[:i]


def surface_edge_labels(count: int) -> Tuple[str, ...]:
    if count <= 26:
        return tuple(string.ascii_lowercase[:count])
    return tuple(f"e{k}" for k in range(count))


@dataclass(frozen=True)
class Triangulation:
    triangles: Tuple[Triangle, ...]
    tails: Tuple[Tuple[Dart, int], ...]
    vertex_labels: Tuple[str, ...]
    edge_labels: Tuple[str, ...]
    polygon: Optional[int] = None
    genus: Optional[int] = None
    punctures: Optional[int] = None
    vertex_values: Optional[Tuple[str, ...]] = None
    distinguished: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        darts = [d for t in self.triangles for d in t]
        if len(set(darts)) != len(darts):
            raise InvalidTriangulationError("a dart occurs in two triangles")
        tails = dict(self.tails)
        if set(tails) != set(darts):
            raise InvalidTriangulationError("tails must cover exactly the triangle darts")
        for t in self.triangles:
            for i in range(3):
                d, nxt = t[i], t[(i + 1) % 3]
                if inv(d) in tails and tails[inv(d)] != tails[nxt]:
                    raise InvalidTriangulationError(
                        f"dart {dart_token(d)} is glued inconsistently"
                    )
        if len(self.edge_labels) != self.edge_count:
            raise InvalidTriangulationError("one label per edge is required")
        if self.polygon is None:
            missing = [e for e in range(self.edge_count) if not self.is_internal(e)]
            if missing:
                raise InvalidTriangulationError(
                    f"edges {missing} bound only one triangle on a closed surface"
                )

    # structure

    @cached_property
    def tail_of(self) -> Dict[Dart, int]:
        return dict(self.tails)

    @cached_property
    def location(self) -> Dict[Dart, Tuple[int, int]]:
        return {d: (t, i) for t, tri in enumerate(self.triangles) for i, d in enumerate(tri)}

    @property
    def is_polygon(self) -> bool:
        return self.polygon is not None

    @property
    def edge_count(self) -> int:
        return 1 + max(edge_of(d) for t in self.triangles for d in t)

    def edges(self) -> range:
        return range(self.edge_count)

    def is_internal(self, e: int) -> bool:
        return e in self.location and inv(e) in self.location

    def internal_edges(self) -> List[int]:
        return [e for e in self.edges() if self.is_internal(e)]

    def boundary_edges(self) -> List[int]:
        return [e for e in self.edges() if not self.is_internal(e)]

    def next_dart(self, d: Dart) -> Dart:
        t, i = self.location[d]
        return self.triangles[t][(i + 1) % 3]

    def prev_dart(self, d: Dart) -> Dart:
        t, i = self.location[d]
        return self.triangles[t][(i + 2) % 3]

    def tail(self, d: Dart) -> int:
        if d in self.tail_of:
            return self.tail_of[d]
        return self.tail_of[self.next_dart(inv(d))]

    def head(self, d: Dart) -> int:
        return self.tail(inv(d))

    def edge_ends(self, e: int) -> Tuple[int, int]:
        return self.tail(e), self.head(e)

    def is_loop(self, e: int) -> bool:
        a, b = self.edge_ends(e)
        return a == b

    def triangle_vertices(self, t: int) -> Tuple[int, int, int]:
        return tuple(self.tail(d) for d in self.triangles[t])

    def triangle_of(self, d: Dart) -> int:
        return self.location[d][0]

    def edge_between(self, a: int, b: int) -> int:
        """Edge joining two polygon vertices."""
        for e in self.edges():
            if set(self.edge_ends(e)) == {a, b} and a != b:
                return e
        raise InvalidInputError(f"no edge between vertices {a} and {b}")

    def resolve_edge(self, token) -> int:
        """Edge from an id, a surface edge label, or a polygon pair like ``0_2``."""
        text = str(token).strip()
        if text in self.edge_labels and not self.is_polygon:
            return self.edge_labels.index(text)
        for sep in ("_", "-", ","):
            if sep in text and self.is_polygon:
                a, b = (int(p) for p in text.split(sep))
                return self.edge_between(a, b)
        if text.isdigit() and int(text) < self.edge_count:
            return int(text)
        raise InvalidInputError(f"unknown edge {token!r}")

    def euler_characteristic(self) -> int:
        return len(self.vertex_labels) - self.edge_count + len(self.triangles)

    # naming

    def edge_name(self, e: int) -> str:
        if self.is_polygon:
            a, b = sorted(self.edge_ends(e))
            return f"{self.vertex_labels[a]}_{self.vertex_labels[b]}"
        return self.edge_labels[e]

    def triangle_name(self, t: int) -> str:
        if self.is_polygon:
            return "_".join(self.vertex_labels[v] for v in sorted(self.triangle_vertices(t)))
        return str(t)

    def diagonals(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(
            tuple(sorted(self.edge_ends(e))) for e in self.internal_edges()
        )

    # flips

    def flip(self, e: int, back: bool = False) -> "Triangulation":
        layout = quadrilateral(self, e)
        return layout.flipped(back)

    def to_dict(self) -> dict:
        data: dict = {
            "triangles": [[dart_token(d) for d in t] for t in self.triangles],
            "tails": {dart_token(d): v for d, v in self.tails},
            "vertices": list(self.vertex_labels),
            "edges": list(self.edge_labels),
        }
        if self.is_polygon:
            data["polygon"] = self.polygon
        else:
            data["genus"] = self.genus
            data["punctures"] = self.punctures
        if self.vertex_values is not None:
            data["values"] = list(self.vertex_values)
        if self.distinguished is not None:
            data["distinguished"] = list(self.distinguished)
        return data


@dataclass(frozen=True)
class Quadrilateral:
    """Two triangles around an internal edge, in the counterclockwise layout
    ``F = (e, a, b)`` and ``G = (~e, c, d)``.

    With ``w = tail(e)``, ``x = tail(d)``, ``u = head(e)``, ``v = tail(b)`` the
    quadrilateral reads ``w, x, u, v`` counterclockwise.
    """

    tri: Triangulation
    e: int
    f_index: int
    g_index: int
    a: Dart
    b: Dart
    c: Dart
    d: Dart

    @property
    def corners(self) -> Tuple[int, int, int, int]:
        t = self.tri
        return t.tail(self.e), t.tail(self.d), t.head(self.e), t.tail(self.b)

    def flipped(self, back: bool = False) -> Triangulation:
        t = self.tri
        e, E = self.e, inv(self.e)
        w, x, u, v = self.corners
        triangles = list(t.triangles)
        tails = dict(t.tails)
        if back:
            triangles[self.f_index] = (e, self.d, self.a)
            triangles[self.g_index] = (E, self.b, self.c)
            tails[e], tails[E] = v, x
        else:
            triangles[self.f_index] = (e, self.b, self.c)
            triangles[self.g_index] = (E, self.d, self.a)
            tails[e], tails[E] = x, v
        logger.debug("flip at edge %s (%s)", e, "back" if back else "forward")
        return replace(
            t, triangles=tuple(triangles), tails=tuple(sorted(tails.items()))
        )


def quadrilateral(tri: Triangulation, e: int) -> Quadrilateral:
    if not 0 <= e < tri.edge_count:
        raise InvalidInputError(f"unknown edge {e}")
    if not tri.is_internal(e):
        raise InvalidInputError(f"edge {tri.edge_name(e)} is a boundary edge")
    f_index, g_index = tri.triangle_of(e), tri.triangle_of(inv(e))
    if f_index == g_index:
        raise FlipNotSupportedError(tri.edge_name(e))
    _, a, b = _rotate(tri.triangles[f_index], e)
    _, c, d = _rotate(tri.triangles[g_index], inv(e))
    return Quadrilateral(tri, e, f_index, g_index, a, b, c, d)


# constructors


def _triangles_of_diagonals(n: int, diagonals: Iterable[Tuple[int, int]]) -> List[Tuple[int, int, int]]:
    edges = {frozenset((i, (i + 1) % n)) for i in range(n)}
    diagonals = [tuple(sorted(p)) for p in diagonals]
    for a, b in diagonals:
        if not (0 <= a < n and 0 <= b < n) or (b - a) % n in (0, 1, n - 1):
            raise InvalidTriangulationError(f"({a}, {b}) is not a diagonal of the {n}-gon")
    for (a, b), (c, d) in itertools.combinations(diagonals, 2):
        if (a < c < b < d) or (c < a < d < b):
            raise InvalidTriangulationError(f"diagonals ({a}, {b}) and ({c}, {d}) cross")
    edges.update(frozenset(p) for p in diagonals)
    if len(edges) != 2 * n - 3:
        raise InvalidTriangulationError(f"a triangulated {n}-gon has {n - 3} diagonals")
    return [
        (a, b, c)
        for a, b, c in itertools.combinations(range(n), 3)
        if {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))} <= edges
    ]


def polygon_triangulation(
    n: int,
    diagonals: Optional[Iterable[Tuple[int, int]]] = None,
    vertex_values: Optional[Sequence[str]] = None,
    distinguished: Optional[Tuple[int, int]] = None,
) -> Triangulation:
    """Triangulated n-gon on vertices 0..n-1 (counterclockwise), fan from 0 by default."""
    if n < 3:
        raise InvalidInputError("a polygon needs at least three vertices")
    if diagonals is None:
        diagonals = [(0, k) for k in range(2, n - 1)]
    diagonals = sorted(tuple(sorted(p)) for p in diagonals)
    triples = _triangles_of_diagonals(n, diagonals)
    edge_id: Dict[frozenset, int] = {}
    orientation: Dict[int, Tuple[int, int]] = {}
    for i in range(n):
        edge_id[frozenset((i, (i + 1) % n))] = i
        orientation[i] = (i, (i + 1) % n)
    for k, (a, b) in enumerate(diagonals):
        edge_id[frozenset((a, b))] = n + k
        orientation[n + k] = (a, b)
    triangles = []
    tails: Dict[Dart, int] = {}
    for corners in triples:
        darts = []
        for i in range(3):
            p, q = corners[i], corners[(i + 1) % 3]
            e = edge_id[frozenset((p, q))]
            dart = e if orientation[e] == (p, q) else inv(e)
            darts.append(dart)
            tails[dart] = p
        triangles.append(tuple(darts))
    return Triangulation(
        triangles=tuple(triangles),
        tails=tuple(sorted(tails.items())),
        vertex_labels=tuple(str(i) for i in range(n)),
        edge_labels=tuple(str(e) for e in range(n + len(diagonals))),
        polygon=n,
        vertex_values=tuple(vertex_values) if vertex_values is not None else None,
        distinguished=distinguished,
    )


def _dart_key(d: Dart) -> Tuple[int, bool]:
    return edge_of(d), d < 0


def _vertex_classes(triangles: Sequence[Triangle]) -> Dict[Dart, int]:
    """Union of dart tails around corners, numbered in dart order."""
    parent: Dict[Dart, Dart] = {}

    def find(x: Dart) -> Dart:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: Dart, y: Dart) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    location = {d: (t, i) for t, tri in enumerate(triangles) for i, d in enumerate(tri)}
    for t in triangles:
        for i in range(3):
            d, nxt = t[i], t[(i + 1) % 3]
            find(d)
            # head(d) = tail(nxt) = tail(~d)
            if inv(d) in location:
                union(inv(d), nxt)
    first: Dict[Dart, Tuple[int, bool]] = {}
    for d in sorted(location, key=_dart_key):
        first.setdefault(find(d), _dart_key(d))
    index = {r: k for k, r in enumerate(sorted(first, key=first.get))}
    return {d: index[find(d)] for d in location}


def triangulation_from_darts(
    triangles: Sequence[Sequence], edge_labels: Optional[Sequence[str]] = None
) -> Triangulation:
    """Closed punctured surface from counterclockwise dart triples."""
    parsed = [tuple(parse_dart(x) for x in t) for t in triangles]
    if any(len(t) != 3 for t in parsed):
        raise InvalidTriangulationError("triangles must have three darts")
    tails = _vertex_classes(parsed)
    vertices = 1 + max(tails.values())
    edge_count = 1 + max(edge_of(d) for t in parsed for d in t)
    chi = vertices - edge_count + len(parsed)
    if chi % 2 or chi > 2:
        raise InvalidTriangulationError("gluing is not an orientable punctured surface")
    genus = (2 - chi) // 2
    labels = tuple(edge_labels) if edge_labels else surface_edge_labels(edge_count)
    return Triangulation(
        triangles=tuple(parsed),
        tails=tuple(sorted(tails.items())),
        vertex_labels=tuple(f"p{k}" for k in range(vertices)),
        edge_labels=labels,
        genus=genus,
        punctures=vertices,
    )


def _stellar(triangles: List[Triangle], t: int, next_edge: int) -> List[Triangle]:
    """Insert a vertex in triangle ``t``; new edges run from the corners to it."""
    d0, d1, d2 = triangles[t]
    u = [next_edge, next_edge + 1, next_edge + 2]
    darts = (d0, d1, d2)
    new = [(darts[i], u[(i + 1) % 3], inv(u[i])) for i in range(3)]
    return triangles[:t] + new + triangles[t + 1 :]


def surface_triangulation(genus: int, punctures: int) -> Triangulation:
    if genus < 0 or punctures < 1 or 2 * genus - 2 + punctures <= 0:
        raise InvalidInputError(
            f"no ideal triangulation of genus {genus} with {punctures} punctures"
        )
    if genus == 0:
        # two triangles glued along their boundary: sphere with three punctures
        triangles: List[Triangle] = [(0, 1, 2), (inv(0), inv(2), inv(1))]
        extra = punctures - 3
    else:
        m = 4 * genus
        side: Dict[int, Dart] = {}
        for k in range(genus):
            a, b = 2 * k, 2 * k + 1
            side[4 * k], side[4 * k + 1] = a, b
            side[4 * k + 2], side[4 * k + 3] = inv(a), inv(b)
        first_diagonal = 2 * genus

        def diagonal(j: int) -> int:
            return first_diagonal + j - 2

        triangles = []
        for i in range(1, m - 1):
            d_in = side[0] if i == 1 else diagonal(i)
            d_out = side[m - 1] if i + 1 == m - 1 else inv(diagonal(i + 1))
            triangles.append((d_in, side[i], d_out))
        extra = punctures - 1
    for _ in range(extra):
        next_edge = 1 + max(edge_of(d) for t in triangles for d in t)
        triangles = _stellar(triangles, 0, next_edge)
    tri = triangulation_from_darts(triangles)
    if tri.genus != genus or tri.punctures != punctures:
        raise InvalidTriangulationError("surface construction went wrong")
    return tri


def coordinate_count(genus: int, punctures: int) -> int:
    return 8 * (2 * genus - 2 + punctures)
