# src/pgl3/commands/classify.py
import argparse

from pgl3.cluster.finite_type import classify_finite_type, mutation_class, mutation_class_search
from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.marked_points import interior_names


def register(subparsers) -> None:
    parser = subparsers.add_parser("classify", help="finite mutation type of the unfrozen part")
    add_triangulation_arguments(parser)
    parser.add_argument("--target", help="Dynkin name to search for, e.g. D4")
    parser.add_argument("--depth", type=int, help="depth limit of the search")
    parser.add_argument("--cap", type=int, help="state cap of the search")
    parser.add_argument("--class-size", action="store_true", help="also count the whole mutation class")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, session: Session) -> int:
    if session.document.seed is not None:
        seed = session.document.seed.to_seed()
    else:
        tri = session.triangulation(args)
        seed = epsilon_of_triangulation(tri).restrict(interior_names(tri))
    jobs = session.config.JOBS
    if args.target:
        found = mutation_class_search(seed, args.target, args.depth, args.cap, jobs)
    else:
        found = classify_finite_type(seed, args.depth, args.cap, jobs)
    result = {"seed": seed.to_dict(), "search": found.to_dict()}
    if args.class_size:
        stats = mutation_class(seed, args.cap, jobs)
        result["class"] = {"size": stats.size, "depth": stats.depth}
    session.emit("classify", result)
    return 0
