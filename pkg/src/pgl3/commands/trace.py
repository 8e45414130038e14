# src/pgl3/commands/trace.py
import argparse

from pgl3.commands.monodromy import loop_word
from pgl3.monodromy.graph import build_graph
from pgl3.monodromy.traces import trace_decomposition_search, trace_of_power
from pgl3.services.session import Session, add_triangulation_arguments


def register(subparsers) -> None:
    parser = subparsers.add_parser("trace", help="traces of powers of monodromies")
    add_triangulation_arguments(parser)
    parser.add_argument("--loop", required=True)
    parser.add_argument("--power", type=int, default=1)
    parser.add_argument("--decompose", action="store_true", help="look for a split into positive factors")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    graph = build_graph(session.triangulation(args))
    loop = graph.loop_from_edges(loop_word(args.loop))
    traced = trace_of_power(graph, loop, args.power)
    result = traced.to_dict()
    result["loop"] = loop.to_list()
    if args.decompose:
        split = trace_decomposition_search(traced.trace)
        result["decomposition"] = split.to_dict() if split else None
    session.emit("trace", result)
    return 0
