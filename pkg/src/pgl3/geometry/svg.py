# src/pgl3/geometry/svg.py
from typing import List, Sequence

import numpy as np

from pgl3.core.config import settings
from pgl3.geometry.polygons import PolygonPair, chart_normal


def _chart_basis(normal: np.ndarray) -> np.ndarray:
    """Orthonormal frame whose first vector is the chart normal."""
    q, r = np.linalg.qr(np.column_stack([normal, np.identity(3)]))
    return q * np.sign(r[0, 0])


def affine_coords(points: Sequence, normal) -> np.ndarray:
    n = np.array([float(x) for x in normal])
    frame = _chart_basis(n)
    pts = np.array([[float(x) for x in p] for p in points])
    pts = pts / (pts @ n)[:, None]
    return pts @ frame[:, 1:3]


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _polygon(coords: np.ndarray, digits: int, style: str) -> str:
    pts = " ".join(f"{_fmt(x, digits)},{_fmt(y, digits)}" for x, y in coords)
    return f'  <polygon points="{pts}" {style}/>'


def render_svg(pair: PolygonPair, size: int = 400, digits: int = None) -> str:
    """Both polygons in an affine chart containing the outer one."""
    digits = digits or settings.SVG_DIGITS
    outer = pair.outer_vertices()
    normal = chart_normal(outer)
    inner_xy = affine_coords(pair.points, normal)
    outer_xy = affine_coords(outer, normal)
    everything = np.vstack([inner_xy, outer_xy])
    low, high = everything.min(axis=0), everything.max(axis=0)
    span = float(max(high - low)) or 1.0
    margin = 0.05 * size

    def fit(xy: np.ndarray) -> np.ndarray:
        scaled = (xy - low) / span * (size - 2 * margin) + margin
        scaled[:, 1] = size - scaled[:, 1]
        return scaled

    lines: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        _polygon(fit(outer_xy), digits, 'fill="none" stroke="black"'),
        _polygon(fit(inner_xy), digits, 'fill="none" stroke="steelblue"'),
    ]
    for x, y in fit(inner_xy):
        lines.append(f'  <circle cx="{_fmt(x, digits)}" cy="{_fmt(y, digits)}" r="3"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
