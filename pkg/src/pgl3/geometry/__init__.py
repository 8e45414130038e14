# src/pgl3/geometry/__init__.py
from pgl3.geometry.polygons import (
    PolygonPair,
    conic_polygon_pair,
    coords_of_polygon_pair,
    dual_polygon_pair,
    is_convex,
    is_convex_inscribed,
    polygon_pair_from_coords,
)
from pgl3.geometry.projective import (
    Flag,
    canonical_triangle,
    cross_ratio,
    triple_ratio,
    triple_ratio_via_lines,
)
from pgl3.geometry.svg import render_svg
