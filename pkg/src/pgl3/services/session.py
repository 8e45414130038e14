# src/pgl3/services/session.py
import argparse
import json
import logging
import random
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple

from pydantic import ValidationError

from pgl3.cluster.seed import Seed
from pgl3.core.config import Settings, settings
from pgl3.core.exceptions import InvalidInputError
from pgl3.geometry.polygons import PolygonPair
from pgl3.schemas.coordinates_schema import Value
from pgl3.schemas.report_schema import Artifact, SessionInput
from pgl3.schemas.triangulation_schema import TriangulationSpec
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.triangulation import Triangulation


logger = logging.getLogger(__name__)

# global flag -> settings field
OVERRIDES = {
    "jobs": "JOBS",
    "seed": "RNG_SEED",
    "poisson_constant": "POISSON_CONSTANT",
    "tolerance": "TOLERANCE",
    "log_level": "LOG_LEVEL",
}


def add_triangulation_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("triangulation")
    group.add_argument("--polygon", type=int, help="triangulated n-gon, fan at vertex 0 by default")
    group.add_argument("--diagonals", help="diagonals of the polygon, e.g. 0_2,0_3")
    group.add_argument("--surface", help="punctured surface, e.g. g1s1")
    group.add_argument("--farey", type=int, metavar="DEPTH", help="Farey window of a given depth")


def parse_diagonals(text: str) -> List[Tuple[int, int]]:
    pairs = []
    for token in text.split(","):
        try:
            a, b = (int(x) for x in token.strip().split("_"))
        except ValueError:
            raise InvalidInputError(f"cannot read diagonal {token!r}")
        pairs.append((a, b))
    return pairs


class Session:
    """Effective configuration, the loaded input document and artifact output."""

    def __init__(
        self,
        config: Settings,
        document: Optional[SessionInput] = None,
        output: Optional[Path] = None,
    ) -> None:
        self.config = config
        self.document = document or SessionInput()
        self.output = output

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "Session":
        update = {
            field: getattr(args, flag)
            for flag, field in OVERRIDES.items()
            if getattr(args, flag, None) is not None
        }
        try:
            config = Settings.model_validate({**settings.model_dump(), **update})
        except ValidationError as exc:
            raise InvalidInputError("invalid option", errors=json.loads(exc.json()))
        document = None
        if getattr(args, "input", None):
            path = Path(args.input)
            if not path.is_file():
                raise InvalidInputError(f"input file {path} not found")
            try:
                document = SessionInput.model_validate_json(path.read_text())
            except ValidationError as exc:
                raise InvalidInputError(
                    "malformed input document", errors=json.loads(exc.json(include_url=False))
                )
        output = Path(args.output) if getattr(args, "output", None) else None
        return cls(config, document, output)

    @contextmanager
    def activate(self) -> Iterator["Session"]:
        """Install the effective configuration into the shared settings object."""
        saved = settings.model_dump()
        for name in Settings.model_fields:
            setattr(settings, name, getattr(self.config, name))
        try:
            yield self
        finally:
            for name, value in saved.items():
                setattr(settings, name, value)

    # inputs

    def rng(self) -> random.Random:
        return random.Random(self.config.RNG_SEED)

    def triangulation(self, args: argparse.Namespace, required: bool = True) -> Optional[Triangulation]:
        flags = {
            "polygon": getattr(args, "polygon", None),
            "diagonals": parse_diagonals(args.diagonals) if getattr(args, "diagonals", None) else None,
            "surface": getattr(args, "surface", None),
            "farey_depth": getattr(args, "farey", None),
        }
        if any(v is not None for v in flags.values()):
            try:
                spec = TriangulationSpec(**flags)
            except ValidationError as exc:
                raise InvalidInputError(
                    "invalid triangulation options", errors=json.loads(exc.json(include_url=False))
                )
            return spec.build()
        if self.document.triangulation is not None:
            return self.document.triangulation.build()
        if required:
            raise InvalidInputError("no triangulation given")
        return None

    def seed(self, args: argparse.Namespace) -> Seed:
        if self.document.seed is not None:
            return self.document.seed.to_seed()
        tri = self.triangulation(args, required=False)
        if tri is None:
            raise InvalidInputError("no seed or triangulation given")
        return epsilon_of_triangulation(tri)

    def assignment(self) -> Optional[Dict[str, Value]]:
        if self.document.coordinates is None:
            return None
        return self.document.coordinates.to_assignment()

    def polygon_pair(self) -> Optional[PolygonPair]:
        if self.document.polygon_pair is None:
            return None
        return self.document.polygon_pair.to_pair()

    # outputs

    def emit(self, command: str, result: Any) -> None:
        artifact = Artifact(command=command, config=self.config.echo(), result=result)
        text = json.dumps(artifact.model_dump(mode="json"), sort_keys=True, indent=2, default=str)
        self.write(command, text + "\n", "json")

    def write(self, command: str, text: str, suffix: str) -> None:
        if self.output is None:
            print(text, end="")
            return
        self.output.mkdir(parents=True, exist_ok=True)
        path = self.output / f"{command}.{suffix}"
        path.write_text(text)
        logger.info("wrote %s", path)
