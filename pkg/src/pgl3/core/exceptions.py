# src/pgl3/core/exceptions.py
from typing import Any, Dict, Optional


EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


class AppError(Exception):
    """Base error of the package.

    Mirrors an HTTP exception: ``exit_code`` plays the role of the status code and
    ``detail`` is the human readable diagnostic. ``extra`` is merged into the JSON
    error document printed by the CLI.
    """

    exit_code: int = EXIT_BAD_INPUT

    def __init__(self, detail: str, **extra: Any) -> None:
        super().__init__(detail)
        self.detail = detail
        self.extra: Dict[str, Any] = extra

    def to_dict(self) -> Dict[str, Any]:
        return {"error": self.detail, "type": type(self).__name__, **self.extra}


class InvalidInputError(AppError):
    pass


class ParseError(InvalidInputError):
    pass


class UnknownVertexError(InvalidInputError):
    def __init__(self, vertex: Any, detail: Optional[str] = None) -> None:
        super().__init__(detail or f"unknown vertex {vertex!r}", vertex=str(vertex))
        self.vertex = vertex


class SeedMismatchError(InvalidInputError):
    pass


class SizeBoundExceededError(InvalidInputError):
    pass


class InvalidTriangulationError(InvalidInputError):
    pass


class FlipNotSupportedError(InvalidInputError):
    def __init__(self, edge: Any) -> None:
        super().__init__("flip not supported at self-glued edge", edge=str(edge))


class DegenerateConfigurationError(InvalidInputError):
    pass


class NonPositiveInputError(InvalidInputError):
    pass


class RepresentationTooLargeError(InvalidInputError):
    pass


class DenominatorVanishesError(AppError):
    def __init__(self) -> None:
        super().__init__("denominator vanishes identically")


class PoleError(AppError):
    def __init__(self, factor: str, point: Optional[Dict[str, str]] = None) -> None:
        super().__init__(f"zero denominator at point: {factor}", factor=factor)
        self.factor = factor
        self.point = point or {}


class SearchCapExceededError(AppError):
    exit_code = EXIT_CHECK_FAILED

    def __init__(self, detail: str, **statistics: Any) -> None:
        super().__init__(detail, statistics=statistics)
        self.statistics = statistics


class CheckFailedError(AppError):
    exit_code = EXIT_CHECK_FAILED

    def __init__(self, detail: str, witness: Any = None) -> None:
        super().__init__(detail, witness=witness)
        self.witness = witness


class NotLaurentError(InvalidInputError):
    pass
