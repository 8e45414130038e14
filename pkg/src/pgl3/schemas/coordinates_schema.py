# src/pgl3/schemas/coordinates_schema.py
from fractions import Fraction
from typing import Dict, Union

from pydantic import BaseModel

from pgl3.algebra.parser import parse_expr
from pgl3.algebra.ratfunc import RatFunc


Value = Union[Fraction, RatFunc]


class CoordinatesSchema(BaseModel):
    """Coordinate values by point name: rationals like ``"3/2"`` or expressions."""

    values: Dict[str, str]

    def to_assignment(self) -> Dict[str, Value]:
        numeric: Dict[str, Fraction] = {}
        for name, text in self.values.items():
            try:
                numeric[name] = Fraction(text)
            except ValueError:
                return {k: parse_expr(v) for k, v in self.values.items()}
        return numeric

    @classmethod
    def from_assignment(cls, assignment: Dict[str, Value]) -> "CoordinatesSchema":
        return cls(values={k: str(v) for k, v in assignment.items()})
