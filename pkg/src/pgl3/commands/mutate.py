# src/pgl3/commands/mutate.py
import argparse

from pgl3.algebra.ratfunc import format_expr
from pgl3.cluster.mutation import mutation_sequence
from pgl3.cluster.poisson import check_poisson_preserved
from pgl3.quantum.maps import compose_all, mutation_chain
from pgl3.services.session import Session, add_triangulation_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser("mutate", help="mutations of a seed")
    add_triangulation_arguments(parser)
    parser.add_argument("--at", action="append", required=True, metavar="VERTEX")
    parser.add_argument("--quantum", action="store_true", help="quantum mutations, composed formally")
    parser.add_argument("--check-poisson", action="store_true")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    seed = session.seed(args)
    if args.quantum:
        qmap = compose_all(mutation_chain(seed, args.at))
        result = {
            "seed": qmap.target.to_dict(),
            "images": qmap.formulas(),
            "star_equivariant": qmap.is_star_equivariant() if len(args.at) == 1 else None,
        }
        session.emit("mutate", result)
        return 0
    cmap = mutation_sequence(seed, args.at)
    result = {
        "seed": cmap.target.to_dict(),
        "images": {v: format_expr(cmap.images[v]) for v in cmap.target.vertices},
    }
    if args.check_poisson:
        # abstract seeds carry the plain bracket
        c = 1 if session.document.seed is not None else session.config.POISSON_CONSTANT
        result["poisson_preserved"] = check_poisson_preserved(cmap, c)
    session.emit("mutate", result)
    return 0
