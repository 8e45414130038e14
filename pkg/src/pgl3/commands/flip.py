# src/pgl3/commands/flip.py
import argparse
from typing import Dict

from pgl3.algebra.ratfunc import RatFunc, eval_at, format_expr, substitute
from pgl3.cluster.mutation import ClusterMap, compose, identity_map
from pgl3.cluster.poisson import check_poisson_preserved
from pgl3.core.exceptions import InvalidInputError
from pgl3.quantum.flips import quantum_flip, quantum_flip_stage
from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.flips import flip_closed_form, flip_via_mutations, quadrilateral_labels
from pgl3.surface.triangulation import Triangulation


def register(subparsers) -> None:
    parser = subparsers.add_parser("flip", help="coordinate change of flips")
    add_triangulation_arguments(parser)
    parser.add_argument("--edge", action="append", required=True, help="edge to flip, e.g. 0_2 or a")
    parser.add_argument("--back", action="store_true", help="flip in the opposite direction")
    parser.add_argument("--method", choices=("closed", "mutations"), default="closed")
    parser.add_argument("--quantum", action="store_true", help="closed-form quantum flip")
    parser.add_argument("--stage", action="store_true", help="quantum images after the mutations at Z and W")
    parser.add_argument("--check-poisson", action="store_true")
    parser.set_defaults(handler=run)


def _images(cmap: ClusterMap) -> Dict[str, str]:
    return {v: format_expr(cmap.images[v]) for v in cmap.target.vertices}


def quantum_result(tri: Triangulation, e: int, back: bool = False, stage: bool = False) -> dict:
    """Quantum images of one flip, or the intermediate images after the mutations at Z and W."""
    result = {"edge": tri.edge_name(e), "letters": quadrilateral_labels(tri, e)}
    if stage:
        result["stage"] = quantum_flip_stage(tri, e).formulas()
    else:
        new_tri, qmap = quantum_flip(tri, e, back=back)
        result["triangulation"] = new_tri.to_dict()
        result["images"] = qmap.formulas()
    return result


def _quantum(args: argparse.Namespace, session: Session) -> int:
    if len(args.edge) != 1:
        raise InvalidInputError("quantum flips are reported one edge at a time")
    tri = session.triangulation(args)
    e = tri.resolve_edge(args.edge[0])
    session.emit("flip", quantum_result(tri, e, back=args.back, stage=args.stage))
    return 0


def run(args: argparse.Namespace, session: Session) -> int:
    if args.quantum or args.stage:
        return _quantum(args, session)
    tri = session.triangulation(args)
    flip = flip_closed_form if args.method == "closed" else flip_via_mutations
    current = tri
    total = identity_map(epsilon_of_triangulation(tri))
    poisson = []
    for token in args.edge:
        e = current.resolve_edge(token)
        current, step = flip(current, e, back=args.back)
        if args.check_poisson:
            poisson.append(check_poisson_preserved(step, session.config.POISSON_CONSTANT))
        total = compose(total, step)
    result = {
        "triangulation": current.to_dict(),
        "images": _images(total),
        "steps": list(total.steps),
    }
    if args.check_poisson:
        result["poisson_preserved"] = all(poisson)
    assignment = session.assignment()
    if assignment is not None:
        if all(not isinstance(v, RatFunc) for v in assignment.values()):
            result["values"] = {v: str(eval_at(img, assignment)) for v, img in total.images.items()}
        else:
            result["values"] = {v: format_expr(substitute(img, assignment)) for v, img in total.images.items()}
    session.emit("flip", result)
    return 0
