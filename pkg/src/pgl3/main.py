# src/pgl3/main.py
import argparse
import json
import logging
import sys
from typing import List, Optional

from pgl3 import __version__
from pgl3.commands import COMMANDS
from pgl3.core.exceptions import AppError
from pgl3.core.logging import configure_logging
from pgl3.services.session import Session


logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgl3",
        description="Exact cluster coordinates for convex projective structures.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--jobs", type=int, help="worker processes for searches and checks")
    parser.add_argument("--seed", type=int, help="seed of every random choice")
    parser.add_argument("--poisson-constant", type=int, choices=[1, 2])
    parser.add_argument("--tolerance", type=float, help="numeric tolerance of quantum checks")
    parser.add_argument("--input", help="JSON document with triangulation, seed, coordinates")
    parser.add_argument("--output", help="directory for artifacts instead of stdout")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        session = Session.from_args(args)
        configure_logging(session.config.LOG_LEVEL)
        logger.debug("running %s", args.command)
        with session.activate():
            return args.handler(args, session)
    except AppError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True, default=str), file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
