# src/pgl3/commands/triangulate.py
import argparse

from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.epsilon import bootstrap_pattern, epsilon_of_triangulation
from pgl3.surface.marked_points import frozen_names, interior_names
from pgl3.surface.triangulation import coordinate_count


def register(subparsers) -> None:
    parser = subparsers.add_parser("triangulate", help="build a triangulation and its seed")
    add_triangulation_arguments(parser)
    parser.add_argument(
        "--bootstrap",
        action="store_true",
        help="derive the triangle pattern from the quadrilateral flip first",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    tri = session.triangulation(args)
    seed = epsilon_of_triangulation(tri)
    result = {
        "triangulation": tri.to_dict(),
        "seed": seed.to_dict(),
        "interior": list(interior_names(tri)),
        "frozen": list(frozen_names(tri)),
        "coordinates": len(seed.vertices),
    }
    if tri.genus is not None:
        result["expected_coordinates"] = coordinate_count(tri.genus, tri.punctures)
    if args.bootstrap:
        result["bootstrap"] = bootstrap_pattern().to_dict()
    session.emit("triangulate", result)
    return 0
