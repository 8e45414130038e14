# src/pgl3/commands/verify.py
import argparse

from pgl3.core.exceptions import CheckFailedError, InvalidInputError
from pgl3.services import checks
from pgl3.services.session import Session, add_triangulation_arguments
from pgl3.surface.triangulation import polygon_triangulation

TARGETS = ("flip-involution", "pentagon", "poisson", "positivity", "sigma", "roundtrip", "quantum")


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="check relations; exit 1 on failure")
    parser.add_argument("target", nargs="?", choices=TARGETS + ("all",))
    parser.add_argument(
        "--pentagon", action="store_const", const="pentagon", dest="target_option", help="same as the pentagon target"
    )
    add_triangulation_arguments(parser)
    parser.add_argument("--classical", action="store_true", help="pentagon: exact classical check (default)")
    parser.add_argument("--quantum", action="store_true", help="pentagon: numeric quantum check, implied by --N")
    parser.add_argument("--N", type=int, action="append", dest="orders", help="root of unity order")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--passes", type=int, default=2)
    parser.add_argument("--samples", type=int, default=0, help="positivity: hyperbolicity points per loop")
    parser.set_defaults(handler=run)


def _reports(args: argparse.Namespace, session: Session, target: str) -> list:
    rng = session.rng()
    orders = args.orders or session.config.QUANTUM_ORDERS
    if target == "flip-involution":
        tri = session.triangulation(args, required=False) or polygon_triangulation(5)
        return [checks.check_flip_involution(tri)]
    if target == "pentagon":
        quantum = args.quantum or bool(args.orders)
        reports = []
        if args.classical or not quantum:
            reports.append(checks.check_classical_pentagon(args.passes))
        if quantum:
            reports.extend(checks.check_quantum_relations(orders, args.trials, ["pentagon"]))
        return reports
    if target == "poisson":
        tri = session.triangulation(args, required=False) or polygon_triangulation(4)
        return [checks.check_poisson(tri)]
    if target == "positivity":
        return [checks.check_trace_positivity(samples=args.samples, rng=rng)]
    if target == "sigma":
        return [checks.check_sigma(rng, args.trials or 10)]
    if target == "roundtrip":
        return [checks.check_roundtrip(rng, args.trials or 50)]
    return checks.check_quantum_relations(orders, args.trials)


def _target(args: argparse.Namespace) -> str:
    if args.target and args.target_option and args.target != args.target_option:
        raise InvalidInputError(f"conflicting targets {args.target} and {args.target_option}")
    target = args.target or args.target_option
    if target is None:
        raise InvalidInputError("verify needs a target, e.g. pentagon or --pentagon")
    return target


def run(args: argparse.Namespace, session: Session) -> int:
    target = _target(args)
    targets = TARGETS if target == "all" else (target,)
    reports = [r for t in targets for r in _reports(args, session, t)]
    session.emit("verify", {"seed": session.config.RNG_SEED, "checks": [r.model_dump() for r in reports]})
    failed = [r for r in reports if not r.passed]
    if failed:
        raise CheckFailedError(f"check {failed[0].check} failed", witness=failed[0].witness)
    return 0
