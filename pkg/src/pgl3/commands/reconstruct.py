# src/pgl3/commands/reconstruct.py
import argparse
from fractions import Fraction
from typing import List

from pgl3.algebra.positivity import random_positive_point
from pgl3.core.exceptions import InvalidInputError
from pgl3.geometry.polygons import (
    conic_polygon_pair,
    coords_of_polygon_pair,
    is_convex_inscribed,
    polygon_pair_from_coords,
)
from pgl3.schemas.polygon_schema import PolygonPairSchema
from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.marked_points import interior_names
from pgl3.surface.triangulation import polygon_triangulation


def register(subparsers) -> None:
    parser = subparsers.add_parser("reconstruct", help="polygon pairs from coordinates and back")
    add_triangulation_arguments(parser)
    parser.add_argument("--random", action="store_true", help="random positive coordinates")
    parser.add_argument("--conic", help="comma separated parameters of points on a conic")
    parser.set_defaults(handler=run)


def parse_parameters(text: str) -> List[Fraction]:
    try:
        return [Fraction(t) for t in text.split(",")]
    except ValueError:
        raise InvalidInputError(f"conic parameters must be rationals, got {text!r}")


def run(args: argparse.Namespace, session: Session) -> int:
    tri = session.triangulation(args, required=False)
    pair = session.polygon_pair()
    if args.conic:
        pair = conic_polygon_pair(parse_parameters(args.conic))
    if pair is not None:
        tri = tri or polygon_triangulation(pair.n)
        coords = coords_of_polygon_pair(pair, tri)
        result = {
            "polygon_pair": PolygonPairSchema.from_pair(pair).model_dump(),
            "coordinates": {k: str(v) for k, v in sorted(coords.items())},
            "convex_inscribed": is_convex_inscribed(pair),
        }
        session.emit("reconstruct", result)
        return 0
    if tri is None or tri.polygon is None:
        raise InvalidInputError("reconstruction needs a triangulated polygon")
    if args.random:
        assignment = random_positive_point(interior_names(tri), session.rng())
    else:
        assignment = session.assignment()
        if assignment is None:
            raise InvalidInputError("give coordinates in the input document or --random")
    pair = polygon_pair_from_coords(assignment, tri)
    result = {
        "coordinates": {k: str(assignment[k]) for k in interior_names(tri)},
        "polygon_pair": PolygonPairSchema.from_pair(pair).model_dump(),
        "convex_inscribed": is_convex_inscribed(pair),
    }
    session.emit("reconstruct", result)
    return 0
