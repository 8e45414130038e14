# src/pgl3/quantum/flips.py
import logging
from typing import Dict, List, Sequence, Tuple

from pgl3.cluster.seed import Seed
from pgl3.core.exceptions import FlipNotSupportedError
from pgl3.quantum.maps import Factor, QProduct, QRationalMap, compose, mutation_chain, relabel
from pgl3.quantum.torus import QLaurent, QTorusElem, ordered_product
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.flips import _edge, _new_positions, quadrilateral_points
from pgl3.surface.marked_points import all_points, point_name
from pgl3.surface.triangulation import Triangulation


logger = logging.getLogger(__name__)

MUTATION_ORDER = ("Z", "W", "X", "Y")


def _relabeling(tri: Triangulation, new_tri: Triangulation, e: int, back: bool) -> Dict[str, str]:
    points = quadrilateral_points(tri, e)
    moved = _new_positions(tri, e, back)
    bijection = {point_name(tri, p): point_name(new_tri, p) for p in all_points(tri)}
    for k in "XYZW":
        bijection[point_name(tri, points[k])] = point_name(new_tri, moved[k])
    return bijection


def quantum_flip_chain(
    tri: Triangulation, e: int, back: bool = False
) -> Tuple[Triangulation, List[QRationalMap]]:
    """Quantum mutations at Z, W, X and Y, then the relabeling onto the new triangulation."""
    points = quadrilateral_points(tri, e)
    new_tri = tri.flip(e, back=back)
    seed = epsilon_of_triangulation(tri)
    chain = mutation_chain(seed, [point_name(tri, points[k]) for k in MUTATION_ORDER])
    chain.append(relabel(chain[-1].target, _relabeling(tri, new_tri, e, back)))
    return new_tri, chain


def quantum_flip_stage(tri: Triangulation, e: int) -> QRationalMap:
    """The coordinates after the mutations at Z and W, composed symbolically."""
    points = quadrilateral_points(tri, e)
    seed = epsilon_of_triangulation(tri)
    first, second = mutation_chain(seed, [point_name(tri, points[k]) for k in ("Z", "W")])
    return compose(first, second)


def flip_factor_formulas(seed: Seed, labels: Dict[str, str]) -> Dict[str, QProduct]:
    """Images of the twelve quadrilateral generators, keyed by letter."""

    def gen(k: str, power: int = 1) -> QTorusElem:
        return QTorusElem.generator(seed, labels[k], power)

    def word(letters: str, qexp: int = 0) -> QTorusElem:
        return ordered_product(seed, [labels[k] for k in letters], QLaurent.q(qexp))

    def one_plus(x: QTorusElem) -> QTorusElem:
        return 1 + x * QLaurent.q(1)

    def f(x: QTorusElem) -> Factor:
        return Factor(x)

    def inv(x: QTorusElem) -> Factor:
        return Factor(x, -1)

    Z, W, X, Y = gen("Z"), gen("W"), gen("X"), gen("Y")
    pz = 1 + word("Z", 1) + word("ZX", 2) + word("ZXW", 3)
    pw = 1 + word("W", 1) + word("WY", 2) + word("WYZ", 3)
    nz = 1 + word("Z", -1) + word("XZ", -2) + word("WXZ", -3)
    nw = 1 + word("W", -1) + word("YW", -2) + word("ZYW", -3)
    return {
        "A": (f(gen("A")), f(one_plus(Z))),
        "B": (f(gen("B")), inv(one_plus(Z)), f(pz)),
        "C": (f(gen("C") * word("ZX")), f(one_plus(W)), inv(nz)),
        "D": (f(gen("D")), inv(one_plus(gen("W", -1)))),
        "E": (f(gen("E")), f(one_plus(W))),
        "F": (f(gen("F")), inv(one_plus(W)), f(pw)),
        "G": (f(gen("G") * word("WY")), f(one_plus(Z)), inv(nw)),
        "H": (f(gen("H")), inv(one_plus(gen("Z", -1)))),
        "X": (inv(one_plus(W)), f(one_plus(gen("Z", -1))), f(gen("X", -1))),
        "Y": (f(one_plus(gen("W", -1))), inv(one_plus(Z)), f(gen("Y", -1))),
        "Z": (f(X), f(one_plus(W)), inv(nz), inv(one_plus(W)), f(pw)),
        "W": (
            f(gen("W", -1)),
            inv(one_plus(Z)),
            f(pz),
            f(word("WY")),
            f(one_plus(Z)),
            inv(nw),
        ),
    }


def quantum_flip(tri: Triangulation, e: int, back: bool = False) -> Tuple[Triangulation, QRationalMap]:
    """Closed-form quantum flip; needs twelve distinct quadrilateral points."""
    points = quadrilateral_points(tri, e)
    if len(set(points.values())) != len(points):
        raise FlipNotSupportedError(tri.edge_name(e))
    new_tri = tri.flip(e, back=back)
    source = epsilon_of_triangulation(tri)
    target = epsilon_of_triangulation(new_tri)
    labels = {k: point_name(tri, p) for k, p in points.items()}
    formulas = flip_factor_formulas(source, labels)
    moved = _new_positions(tri, e, back)
    replaced = {points[k] for k in "XYZW"}
    images: Dict[str, QProduct] = {}
    for p in all_points(new_tri):
        if p not in replaced:
            images[point_name(new_tri, p)] = (Factor(QTorusElem.generator(source, point_name(tri, p))),)
    for k in "ABCDEFGH":
        images[point_name(new_tri, points[k])] = formulas[k]
    for k in "XYZW":
        images[point_name(new_tri, moved[k])] = formulas[k]
    logger.debug("quantum flip at %s", tri.edge_name(e))
    return new_tri, QRationalMap(source, target, images, steps=(f"qflip:{tri.edge_name(e)}",))


def quantum_flip_sequence(
    tri: Triangulation, edges: Sequence, back: bool = False
) -> Tuple[Triangulation, List[QRationalMap]]:
    """Closed-form quantum flips in order, kept as a chain of maps."""
    current = tri
    chain: List[QRationalMap] = []
    for token in edges:
        current, step = quantum_flip(current, _edge(current, token), back=back)
        chain.append(step)
    return current, chain
