# src/pgl3/surface/marked_points.py
"""Names of the coordinate points of a triangulation.

Every edge carries two points, one near each end, and every triangle one
central point. Names depend only on geometry: ``edge:0_2:near:0`` and
``tri:0_1_2:center`` on polygons, ``edge:a:near:p0`` and ``tri:3:center`` on
punctured surfaces, with ``@tail``/``@head`` telling apart the two ends of a
loop edge.
"""
from typing import Dict, List, NamedTuple, Tuple

from pgl3.algebra.ratfunc import sort_variables
from pgl3.surface.triangulation import Dart, Triangulation, edge_of


class EdgePoint(NamedTuple):
    edge: int
    end: int


class CenterPoint(NamedTuple):
    triangle: int


def tail_point(d: Dart) -> EdgePoint:
    return EdgePoint(edge_of(d), 0 if d >= 0 else 1)


def head_point(d: Dart) -> EdgePoint:
    return EdgePoint(edge_of(d), 1 if d >= 0 else 0)


def point_name(tri: Triangulation, point) -> str:
    if isinstance(point, CenterPoint):
        return f"tri:{tri.triangle_name(point.triangle)}:center"
    ends = tri.edge_ends(point.edge)
    label = tri.vertex_labels[ends[point.end]]
    if ends[0] == ends[1]:
        label += "@tail" if point.end == 0 else "@head"
    return f"edge:{tri.edge_name(point.edge)}:near:{label}"


def all_points(tri: Triangulation) -> List:
    points: List = [EdgePoint(e, end) for e in tri.edges() for end in (0, 1)]
    points.extend(CenterPoint(t) for t in range(len(tri.triangles)))
    return points


def point_names(tri: Triangulation) -> Dict[str, object]:
    return {point_name(tri, p): p for p in all_points(tri)}


def interior_names(tri: Triangulation) -> Tuple[str, ...]:
    names = [
        point_name(tri, p)
        for p in all_points(tri)
        if isinstance(p, CenterPoint) or tri.is_internal(p.edge)
    ]
    return sort_variables(names)


def frozen_names(tri: Triangulation) -> Tuple[str, ...]:
    names = [
        point_name(tri, EdgePoint(e, end)) for e in tri.boundary_edges() for end in (0, 1)
    ]
    return sort_variables(names)
