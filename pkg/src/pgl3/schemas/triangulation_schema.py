# src/pgl3/schemas/triangulation_schema.py
import re
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from pgl3.surface.farey import farey_window
from pgl3.surface.triangulation import (
    Triangulation,
    polygon_triangulation,
    surface_triangulation,
    triangulation_from_darts,
)


SURFACE = re.compile(r"g(\d+)s(\d+)\Z")


class TriangulationSpec(BaseModel):
    """One of: a polygon with diagonals, a surface ``g<genus>s<punctures>``,
    a Farey window depth, or explicit dart triples of a closed surface."""

    polygon: Optional[int] = Field(None, ge=3)
    diagonals: Optional[List[Tuple[int, int]]] = None
    surface: Optional[str] = None
    farey_depth: Optional[int] = Field(None, ge=0)
    triangles: Optional[List[List[str]]] = None
    edge_labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def exactly_one_kind(self) -> "TriangulationSpec":
        kinds = [
            self.polygon is not None,
            self.surface is not None,
            self.farey_depth is not None,
            self.triangles is not None,
        ]
        if sum(kinds) != 1:
            raise ValueError("give exactly one of polygon, surface, farey_depth, triangles")
        if self.surface is not None and not SURFACE.match(self.surface):
            raise ValueError("surface must look like g1s1")
        if self.diagonals is not None and self.polygon is None:
            raise ValueError("diagonals need a polygon")
        return self

    def build(self) -> Triangulation:
        if self.polygon is not None:
            return polygon_triangulation(self.polygon, self.diagonals)
        if self.surface is not None:
            genus, punctures = (int(x) for x in SURFACE.match(self.surface).groups())
            return surface_triangulation(genus, punctures)
        if self.farey_depth is not None:
            return farey_window(self.farey_depth)
        return triangulation_from_darts(self.triangles, self.edge_labels)
