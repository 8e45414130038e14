# src/pgl3/schemas/report_schema.py
from typing import Any, Dict, Optional

from pydantic import BaseModel

from pgl3.schemas.coordinates_schema import CoordinatesSchema
from pgl3.schemas.polygon_schema import PolygonPairSchema
from pgl3.schemas.seed_schema import SeedSchema
from pgl3.schemas.triangulation_schema import TriangulationSpec


class SessionInput(BaseModel):
    """Document accepted by ``--input``; every part is optional."""

    triangulation: Optional[TriangulationSpec] = None
    seed: Optional[SeedSchema] = None
    coordinates: Optional[CoordinatesSchema] = None
    polygon_pair: Optional[PolygonPairSchema] = None


class CheckReport(BaseModel):
    check: str
    passed: bool
    details: Dict[str, Any] = {}
    witness: Optional[Any] = None


class Artifact(BaseModel):
    command: str
    config: Dict[str, Any]
    result: Any
