# src/pgl3/commands/monodromy.py
import argparse
from typing import List

from pgl3.core.exceptions import InvalidInputError
from pgl3.monodromy.graph import LoopWord, MonodromyGraph, build_graph
from pgl3.monodromy.positivity import certify_loop, hyperbolicity_check
from pgl3.services.session import Session, add_triangulation_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser("monodromy", help="monodromy of loops and its positivity")
    add_triangulation_arguments(parser)
    parser.add_argument("--loop", help="edges crossed in order, e.g. ab or a,b")
    parser.add_argument("--boundary", action="store_true", help="loops around the punctures")
    parser.add_argument("--samples", type=int, default=0, help="random points for the hyperbolicity check")
    parser.set_defaults(handler=run)


def loop_word(text: str) -> List[str]:
    return [t for t in text.split(",") if t] if "," in text else list(text)


def _loops(args: argparse.Namespace, graph: MonodromyGraph) -> List[LoopWord]:
    if args.boundary:
        return graph.boundary_loops()
    if not args.loop:
        raise InvalidInputError("give --loop or --boundary")
    return [graph.loop_from_edges(loop_word(args.loop))]


def run(args: argparse.Namespace, session: Session) -> int:
    graph = build_graph(session.triangulation(args))
    rng = session.rng()
    assignment = session.assignment()
    loops = []
    for loop in _loops(args, graph):
        m = graph.monodromy(loop)
        entry = {
            "loop": loop.to_list(),
            "boundary": loop.is_boundary(),
            "matrix": m.to_lists(),
            "total_positivity": certify_loop(graph, loop).to_dict(),
        }
        if assignment is not None:
            entry["value"] = m.specialize(assignment).to_lists()
        if args.samples and not loop.is_boundary():
            entry["hyperbolicity"] = hyperbolicity_check(graph, loop, args.samples, rng).to_dict()
        loops.append(entry)
    result = {"fundamental_rank": graph.fundamental_rank(), "loops": loops}
    session.emit("monodromy", result)
    return 0
