# src/pgl3/commands/render.py
import argparse

from pgl3.core.exceptions import InvalidInputError
from pgl3.geometry.polygons import polygon_pair_from_coords
from pgl3.geometry.svg import render_svg
from pgl3.services.session import Session, add_triangulation_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser("render", help="SVG picture of a polygon pair")
    add_triangulation_arguments(parser)
    parser.add_argument("--size", type=int, default=400)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    pair = session.polygon_pair()
    if pair is None:
        assignment = session.assignment()
        tri = session.triangulation(args, required=False)
        if assignment is None or tri is None:
            raise InvalidInputError("render needs a polygon pair, or coordinates with a polygon")
        pair = polygon_pair_from_coords(assignment, tri)
    session.write("render", render_svg(pair, size=args.size), "svg")
    return 0
