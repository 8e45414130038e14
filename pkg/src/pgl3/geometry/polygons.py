# src/pgl3/geometry/polygons.py
"""Pairs of polygons, one inscribed into the other, and their coordinates.

A pair is a cyclic list of flags ``(A_i, a_i)``: the vertices ``A_i`` of the
inner polygon and the sides ``a_i`` of the outer one, with ``A_i`` on
``a_i``. Vertices are numbered counterclockwise as in
:func:`pgl3.surface.polygon_triangulation`.
"""
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix

from pgl3.core.exceptions import (
    DegenerateConfigurationError,
    InvalidInputError,
    NonPositiveInputError,
)
from pgl3.geometry.projective import (
    Flag,
    Vec,
    add,
    canonical_triangle,
    cross,
    cross_ratio,
    det3,
    dot,
    is_zero,
    meet,
    primitive,
    scale,
    solve_fourth,
    to_matrix,
    triple_ratio,
)
from pgl3.surface.marked_points import CenterPoint, EdgePoint, interior_names, point_name
from pgl3.surface.triangulation import Triangulation, polygon_triangulation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolygonPair:
    flags: Tuple[Flag, ...]

    def __post_init__(self) -> None:
        if len(self.flags) < 3:
            raise InvalidInputError("a polygon pair needs at least three flags")

    @classmethod
    def from_lists(cls, points: Sequence, lines: Sequence) -> "PolygonPair":
        if len(points) != len(lines):
            raise InvalidInputError("as many sides as vertices are required")
        return cls(tuple(Flag.of(p, l) for p, l in zip(points, lines)))

    @property
    def n(self) -> int:
        return len(self.flags)

    @property
    def points(self) -> List[Vec]:
        return [f.point for f in self.flags]

    @property
    def lines(self) -> List[Vec]:
        return [f.line for f in self.flags]

    def outer_vertices(self) -> List[Vec]:
        """``B_i = a_i meet a_(i+1)``."""
        lines = self.lines
        return [meet(lines[i], lines[(i + 1) % self.n]) for i in range(self.n)]

    def transformed(self, m: Matrix) -> "PolygonPair":
        return PolygonPair(tuple(f.transformed(m) for f in self.flags))

    def normalized(self) -> "PolygonPair":
        return PolygonPair(
            tuple(Flag.of(primitive(f.point), primitive(f.line)) for f in self.flags)
        )

    def to_dict(self) -> dict:
        pair = self.normalized()
        return {
            "points": [list(primitive(p)) for p in pair.points],
            "lines": [list(primitive(l)) for l in pair.lines],
        }


# convexity


def convex_lifts(points: Sequence[Vec]) -> Optional[List[Vec]]:
    """Lifts spanning a pointed cone in the given cyclic order, if there are any.

    The lift of every vertex after the first two is chosen so that
    ``det(p_1, p_2, p_k)`` has a fixed sign; the polygon is convex when then
    every side leaves all other vertices on that same side.
    """
    n = len(points)
    for sign in (1, -1):
        lifts = [points[0], points[1]]
        ok = True
        for p in points[2:]:
            d = det3(points[0], points[1], p)
            if d == 0:
                return None
            lifts.append(p if (d > 0) == (sign > 0) else scale(-1, p))
        for i in range(n):
            p, q = lifts[i], lifts[(i + 1) % n]
            for k in range(n):
                if k in (i, (i + 1) % n):
                    continue
                d = det3(p, q, lifts[k])
                if d == 0 or (d > 0) != (sign > 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return lifts
    return None


def is_convex(points: Sequence[Vec]) -> bool:
    return convex_lifts(points) is not None


def _segment_coefficients(a: Vec, b1: Vec, b2: Vec) -> Optional[Tuple[Fraction, Fraction]]:
    """``(l, m)`` with ``a = l b1 + m b2`` when ``a`` lies on the line ``b1 b2``."""
    base = cross(b1, b2)
    if is_zero(base) or det3(b1, b2, a) != 0:
        return None
    num_l, num_m = cross(a, b2), cross(b1, a)
    k = next(i for i in range(3) if base[i] != 0)
    return num_l[k] / base[k], num_m[k] / base[k]


def is_convex_inscribed(pair: PolygonPair) -> bool:
    """Both polygons convex and each inner vertex strictly inside its outer side."""
    try:
        outer = pair.outer_vertices()
    except DegenerateConfigurationError:
        return False
    if not is_convex(pair.points):
        return False
    lifts = convex_lifts(outer)
    if lifts is None:
        return False
    n = pair.n
    for i in range(n):
        coeffs = _segment_coefficients(pair.points[i], lifts[i - 1], lifts[i])
        if coeffs is None:
            return False
        lam, mu = coeffs
        if lam == 0 or mu == 0 or (lam > 0) != (mu > 0):
            return False
    return True


def chart_normal(points: Sequence[Vec]) -> Vec:
    """Normal of an affine chart containing a convex polygon."""
    lifts = convex_lifts(points)
    if lifts is None:
        raise DegenerateConfigurationError("polygon is not convex")
    n = len(lifts)
    total: Vec = (Fraction(0),) * 3
    for i in range(n):
        total = add(total, cross(lifts[i], lifts[(i + 1) % n]))
    return total


# coordinates


def _ccw_with_middle(triple: Tuple[int, int, int], middle: int) -> Tuple[int, int, int]:
    i = triple.index(middle)
    return triple[i - 1], triple[i], triple[(i + 1) % 3]


def _triangles_by_vertices(tri: Triangulation) -> Dict[Tuple[int, int, int], int]:
    return {tuple(sorted(tri.triangle_vertices(t))): t for t in range(len(tri.triangles))}


def _check_polygon(pair: PolygonPair, tri: Triangulation) -> None:
    if tri.polygon != pair.n:
        raise InvalidInputError(f"triangulation of a {tri.polygon}-gon for a pair of {pair.n}-gons")


def coords_of_polygon_pair(pair: PolygonPair, tri: Optional[Triangulation] = None) -> Dict[str, Fraction]:
    """Triple ratios of triangles and cross-ratios at the ends of diagonals."""
    tri = tri or polygon_triangulation(pair.n)
    _check_polygon(pair, tri)
    flags = pair.flags
    coords: Dict[str, Fraction] = {}
    for t in range(len(tri.triangles)):
        i, j, k = sorted(tri.triangle_vertices(t))
        coords[point_name(tri, CenterPoint(t))] = triple_ratio(flags[i], flags[j], flags[k])
    triangles = _triangles_by_vertices(tri)
    for e in tri.internal_edges():
        ends = tri.edge_ends(e)
        thirds = [
            [v for v in triple if v not in ends][0]
            for triple in triangles
            if set(ends) <= set(triple)
        ]
        for end, v in enumerate(ends):
            u = ends[1 - end]
            # the triangle V, N, U is counterclockwise, the triangle V, U, P as well
            n_, p_ = _split_thirds(v, u, thirds, pair.n)
            A = flags[v].point
            lines = (flags[v].line, meet(A, flags[n_].point), meet(A, flags[u].point), meet(A, flags[p_].point))
            coords[point_name(tri, EdgePoint(e, end))] = cross_ratio(*lines)
    return coords


def _split_thirds(v: int, u: int, thirds: List[int], n: int) -> Tuple[int, int]:
    """Order the two opposite vertices of diagonal ``vu`` as (N, P)."""
    a, b = thirds
    # N follows V counterclockwise before U is reached
    def ahead(x: int) -> int:
        return (x - v) % n

    if ahead(a) < ahead(u):
        return a, b
    return b, a


def polygon_pair_from_coords(
    assignment: Mapping[str, object], tri: Optional[Triangulation] = None, n: Optional[int] = None
) -> PolygonPair:
    """Reconstruct the pair, unique up to projective maps, from positive coordinates."""
    if tri is None:
        if n is None:
            raise InvalidInputError("either a triangulation or a polygon size is required")
        tri = polygon_triangulation(n)
    n = tri.polygon
    values = {k: Fraction(assignment[k]) for k in interior_names(tri) if k in assignment}
    missing = set(interior_names(tri)) - set(values)
    if missing:
        raise InvalidInputError(f"missing coordinates: {sorted(missing)}")
    bad = {k: str(v) for k, v in values.items() if v <= 0}
    if bad:
        raise NonPositiveInputError("coordinates must be positive", values=bad)
    triangles = _triangles_by_vertices(tri)
    center = {triple: values[point_name(tri, CenterPoint(t))] for triple, t in triangles.items()}
    edge_value = {}
    for e in tri.internal_edges():
        for end, v in enumerate(tri.edge_ends(e)):
            edge_value[(frozenset(tri.edge_ends(e)), v)] = values[point_name(tri, EdgePoint(e, end))]

    first = min(triangles)
    placed: Dict[int, Flag] = dict(zip(first, canonical_triangle(center[first])))
    queue = deque([first])
    done = {first}
    while queue:
        known = queue.popleft()
        for other in triangles:
            if other in done or len(set(other) & set(known)) != 2:
                continue
            nb = [x for x in known if x not in other][0]
            v, mid, u = _ccw_with_middle(known, nb)
            p = [x for x in other if x not in known][0]
            placed[p] = _next_flag(
                placed,
                v,
                mid,
                u,
                edge_value[(frozenset((v, u)), v)],
                edge_value[(frozenset((v, u)), u)],
                center[other],
            )
            done.add(other)
            queue.append(other)
    pair = PolygonPair(tuple(placed[i] for i in range(n))).normalized()
    logger.debug("reconstructed a pair of %d-gons", n)
    return pair


def _next_flag(placed: Dict[int, Flag], v: int, nb: int, u: int, z_v, w_u, y) -> Flag:
    """The flag at P across the diagonal VU from the counterclockwise triangle V, N, U."""
    A_v, l_v = placed[v].point, placed[v].line
    A_u, l_u = placed[u].point, placed[u].line
    A_n = placed[nb].point
    vn, vu = meet(A_v, A_n), meet(A_v, A_u)
    vp = solve_fourth(l_v, vn, vu, z_v, A_v)
    # cr(l_U, UP, UV, UN) = cr(UV, UN, l_U, UP)
    uv, un = meet(A_u, A_v), meet(A_u, A_n)
    up = solve_fourth(uv, un, l_u, w_u, A_u)
    A_p = meet(vp, up)
    m1, m2 = meet(A_p, A_v), meet(A_p, A_u)
    denom = dot(l_v, A_p) * dot(l_u, A_v)
    if denom == 0:
        raise DegenerateConfigurationError("reconstruction hit a degenerate configuration")
    k = dot(l_v, A_u) * dot(l_u, A_p) / denom
    line = add(scale(k * dot(m2, A_v), m1), scale(Fraction(y) * dot(m1, A_u), m2))
    if is_zero(line):
        raise DegenerateConfigurationError("reconstruction hit a degenerate configuration")
    return Flag(A_p, line)


def dual_polygon_pair(pair: PolygonPair) -> PolygonPair:
    """Exchange points and lines: vertices become sides and sides vertices."""
    return PolygonPair(tuple(Flag(f.line, f.point) for f in pair.flags))


def equivalent_pairs(first: PolygonPair, second: PolygonPair) -> bool:
    """Whether two pairs have the same coordinates, hence differ by a projective map."""
    if first.n != second.n:
        return False
    return coords_of_polygon_pair(first) == coords_of_polygon_pair(second)


def conic_polygon_pair(parameters: Sequence, transform: Optional[Sequence[Sequence[int]]] = None) -> PolygonPair:
    """Points of the unit circle at rational parameters with their tangent lines."""
    ts = sorted(Fraction(t) for t in parameters)
    if len(set(ts)) != len(ts):
        raise InvalidInputError("parameters must be distinct")
    flags = tuple(
        Flag.of((1 - t * t, 2 * t, 1 + t * t), (1 - t * t, 2 * t, -(1 + t * t))) for t in ts
    )
    pair = PolygonPair(flags)
    if transform is not None:
        m = to_matrix(transform)
        if m.det() == 0:
            raise InvalidInputError("projective map must be invertible")
        pair = pair.transformed(m)
    return pair.normalized()
