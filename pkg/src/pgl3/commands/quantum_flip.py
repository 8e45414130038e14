# src/pgl3/commands/quantum_flip.py
import argparse

from pgl3.algebra.ratfunc import format_expr
from pgl3.commands.flip import quantum_result
from pgl3.core.exceptions import InvalidInputError
from pgl3.quantum.flips import quantum_flip
from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.flips import flip_closed_form
from pgl3.surface.triangulation import polygon_triangulation


def register(subparsers) -> None:
    parser = subparsers.add_parser("quantum-flip", help="quantum flip of one edge, quadrilateral by default")
    add_triangulation_arguments(parser)
    parser.add_argument("--edge", help="edge to flip; optional when there is one internal edge")
    parser.add_argument("--back", action="store_true", help="flip in the opposite direction")
    parser.add_argument(
        "--q-symbolic",
        action="store_true",
        help="formulas in q, with the intermediate images after the mutations at Z and W",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    tri = session.triangulation(args, required=False) or polygon_triangulation(4)
    if args.edge is not None:
        e = tri.resolve_edge(args.edge)
    elif len(tri.internal_edges()) == 1:
        e = tri.internal_edges()[0]
    else:
        raise InvalidInputError("--edge is required when there are several internal edges")

    if args.q_symbolic:
        result = quantum_result(tri, e, back=args.back)
        result["stage"] = quantum_result(tri, e, stage=True)["stage"]
    else:
        new_tri, qmap = quantum_flip(tri, e, back=args.back)
        classical = qmap.specialize_q1()
        result = {
            "edge": tri.edge_name(e),
            "triangulation": new_tri.to_dict(),
            "images_at_q1": {v: format_expr(img) for v, img in classical.images.items()},
            "matches_classical": classical.equals(flip_closed_form(tri, e, back=args.back)[1]),
        }
    session.emit("quantum-flip", result)
    return 0
