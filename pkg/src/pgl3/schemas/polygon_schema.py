# src/pgl3/schemas/polygon_schema.py
from typing import List

from pydantic import BaseModel, field_validator

from pgl3.geometry.polygons import PolygonPair


class PolygonPairSchema(BaseModel):
    points: List[List[str]]
    lines: List[List[str]]

    @field_validator("points", "lines", mode="before")
    @classmethod
    def stringify(cls, value):
        return [[str(x) for x in row] for row in value]

    @field_validator("points", "lines")
    @classmethod
    def three_entries(cls, value: List[List[str]]) -> List[List[str]]:
        if any(len(row) != 3 for row in value):
            raise ValueError("homogeneous coordinates have three entries")
        return value

    def to_pair(self) -> PolygonPair:
        return PolygonPair.from_lists(self.points, self.lines)

    @classmethod
    def from_pair(cls, pair: PolygonPair) -> "PolygonPairSchema":
        return cls(**pair.to_dict())
