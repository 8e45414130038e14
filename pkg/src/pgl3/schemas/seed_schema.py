# src/pgl3/schemas/seed_schema.py
from typing import List, Tuple

from pydantic import BaseModel, field_validator

from pgl3.algebra.ratfunc import IDENTIFIER
from pgl3.cluster.seed import Seed


class SeedSchema(BaseModel):
    vertices: List[str]
    epsilon: List[Tuple[str, str, int]] = []

    @field_validator("vertices")
    @classmethod
    def check_names(cls, value: List[str]) -> List[str]:
        for name in value:
            if not IDENTIFIER.match(name):
                raise ValueError(f"invalid vertex name {name!r}")
        return value

    def to_seed(self) -> Seed:
        return Seed.from_entries(self.vertices, self.epsilon)

    @classmethod
    def from_seed(cls, seed: Seed) -> "SeedSchema":
        return cls(**seed.to_dict())
