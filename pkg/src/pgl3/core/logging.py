# src/pgl3/core/logging.py
import logging
import sys


LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING") -> None:
    """Route package logs to stderr; stdout is reserved for artifacts."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root = logging.getLogger("pgl3")
    root.handlers[:] = [handler]
    root.setLevel(level.upper())
    root.propagate = False
