import json
import random
from fractions import Fraction

import pytest

from pgl3.core.config import settings
from pgl3.geometry.polygons import PolygonPair
from pgl3.main import main
from pgl3.surface.triangulation import polygon_triangulation, surface_triangulation


@pytest.fixture
def rng() -> random.Random:
    return random.Random(settings.RNG_SEED)


@pytest.fixture(scope="session")
def quad():
    return polygon_triangulation(4)


@pytest.fixture(scope="session")
def pentagon():
    return polygon_triangulation(5)


@pytest.fixture(scope="session")
def torus():
    return surface_triangulation(1, 1)


@pytest.fixture
def kite() -> PolygonPair:
    """A square with a tangent-like circumscribed quadrilateral, fan at vertex 0."""
    return PolygonPair.from_lists(
        [(0, 0, 1), (2, 0, 1), (2, 2, 1), (0, 2, 1)],
        [(1, 1, 0), (1, -1, -2), (2, 1, -6), (1, -1, 2)],
    )


@pytest.fixture
def kite_coordinates():
    return {
        "tri:0_1_2:center": Fraction(3, 2),
        "tri:0_2_3:center": Fraction(4, 3),
        "edge:0_2:near:0": Fraction(1),
        "edge:0_2:near:2": Fraction(2),
    }


@pytest.fixture
def run_cli(capsys):
    """Run the command line and return (exit code, parsed stdout, stderr)."""

    def call(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        out = json.loads(captured.out) if captured.out.strip().startswith("{") else captured.out
        return code, out, captured.err

    return call


@pytest.fixture
def input_file(tmp_path):
    """Write a session input document and return its path."""

    def write(document: dict) -> str:
        path = tmp_path / "input.json"
        path.write_text(json.dumps(document))
        return str(path)

    return write
