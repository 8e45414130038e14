# src/pgl3/surface/sigma.py
"""The involution exchanging the two points of every edge.

On an edge with points ``p`` (end 0) and ``p'`` (end 1) it sends ``p`` to
``p'(1 + c')/(c'(1 + c))``, where ``c`` is the center of the triangle in which
the end of ``p`` is the head of the side and ``c'`` the other center; centers
go to their inverses. Boundary points of a polygon are left alone.
"""
from fractions import Fraction
from typing import Dict, Mapping, Union

from pgl3.algebra.ratfunc import RatFunc, eval_at, substitute
from pgl3.cluster.mutation import ClusterMap
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.marked_points import CenterPoint, EdgePoint, interior_names, point_name
from pgl3.surface.triangulation import Triangulation, inv


Value = Union[Fraction, int, RatFunc]


def sigma_images(tri: Triangulation) -> Dict[str, RatFunc]:
    images: Dict[str, RatFunc] = {}
    for t in range(len(tri.triangles)):
        name = point_name(tri, CenterPoint(t))
        images[name] = RatFunc.var(name).inverse()
    for e in tri.internal_edges():
        ends = [RatFunc.var(point_name(tri, EdgePoint(e, end))) for end in (0, 1)]
        centers = [
            RatFunc.var(point_name(tri, CenterPoint(tri.triangle_of(d)))) for d in (inv(e), e)
        ]
        for end in (0, 1):
            own, other = centers[end], centers[1 - end]
            images[point_name(tri, EdgePoint(e, end))] = (
                ends[1 - end] * (1 + other) / (other * (1 + own))
            )
    return images


def sigma_map(tri: Triangulation) -> ClusterMap:
    """Sigma on the coordinates of internal edges and triangles."""
    seed = epsilon_of_triangulation(tri).restrict(interior_names(tri))
    return ClusterMap(seed, seed, sigma_images(tri), steps=("sigma",))


def sigma_involution(tri: Triangulation, assignment: Mapping[str, Value]) -> Dict[str, Value]:
    images = sigma_images(tri)
    numeric = all(not isinstance(v, RatFunc) for v in assignment.values())
    result: Dict[str, Value] = dict(assignment)
    for name, image in images.items():
        if numeric:
            result[name] = eval_at(image, assignment)
        else:
            result[name] = substitute(image, assignment)
    return result


def is_sigma_fixed(tri: Triangulation, assignment: Mapping[str, Value]) -> bool:
    image = sigma_involution(tri, assignment)
    return all(image[k] == assignment[k] for k in interior_names(tri))
