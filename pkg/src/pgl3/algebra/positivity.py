# src/pgl3/algebra/positivity.py
"""Semi-decision procedure for positivity of rational functions.

Order of attempts: coefficient scan of the reduced form, multiplication of
numerator and denominator by small positive factors, random positive samples.
Samples can only refute.
"""
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from pgl3.algebra.ratfunc import RatFunc, format_expr, to_fraction
from pgl3.core.config import settings
from pgl3.core.exceptions import PoleError


logger = logging.getLogger(__name__)


class Positivity(str, Enum):
    POSITIVE_LAURENT = "POSITIVE_LAURENT"
    POSITIVE_RATIO = "POSITIVE_RATIO"
    NEGATIVE_WITNESS = "NEGATIVE_WITNESS"
    INDETERMINATE = "INDETERMINATE"

    @property
    def is_positive(self) -> bool:
        return self in (Positivity.POSITIVE_LAURENT, Positivity.POSITIVE_RATIO)


@dataclass(frozen=True)
class Certificate:
    status: Positivity
    witness: Optional[Dict[str, Fraction]] = None
    value: Optional[Fraction] = None
    multiplier: Optional[str] = None
    note: str = ""

    def to_dict(self) -> dict:
        data: dict = {"status": self.status.value}
        if self.witness is not None:
            data["witness"] = {k: str(v) for k, v in self.witness.items()}
        if self.value is not None:
            data["value"] = str(self.value)
        if self.multiplier is not None:
            data["multiplier"] = self.multiplier
        if self.note:
            data["note"] = self.note
        return data


def _signs(poly) -> set:
    return {to_fraction(c) > 0 for c in poly.values()}


def _all_positive(poly) -> bool:
    return bool(poly) and _signs(poly) == {True}


def _all_negative(poly) -> bool:
    return bool(poly) and _signs(poly) == {False}


def _ratio_positive(numer, denom) -> bool:
    return (_all_positive(numer) and _all_positive(denom)) or (
        _all_negative(numer) and _all_negative(denom)
    )


def coefficient_scan(expr: RatFunc) -> Optional[Positivity]:
    if expr.is_zero():
        return None
    if expr.is_laurent():
        coeffs = [c for _, c in expr.laurent_terms()]
        if all(c > 0 and c.denominator == 1 for c in coeffs):
            return Positivity.POSITIVE_LAURENT
    if _ratio_positive(expr.numer, expr.denom):
        return Positivity.POSITIVE_RATIO
    return None


def _candidate_factors(expr: RatFunc, degree: int) -> List[RatFunc]:
    factors: List[RatFunc] = []
    gens = [RatFunc.var(v) for v in expr.variables]
    for x in gens:
        base = [1 + x, 1 + x + x**2]
        for b in base:
            for k in range(1, degree + 1):
                factors.append(b**k)
    if len(gens) > 1:
        joint = RatFunc.const(1)
        for x in gens:
            joint = joint * (1 + x)
        for k in range(1, degree + 1):
            factors.append(joint**k)
    return factors


def factor_search(expr: RatFunc, degree: int) -> Optional[RatFunc]:
    """A positive polynomial ``m`` such that ``num*m`` and ``den*m`` are positive."""
    field = expr.field
    for factor in _candidate_factors(expr, degree):
        poly = RatFunc.coerce(factor)
        numer = (RatFunc(field.new(expr.numer)) * poly).numer
        denom = (RatFunc(field.new(expr.denom)) * poly).numer
        if _ratio_positive(numer, denom):
            return poly
    return None


def random_positive_point(
    names: Sequence[str], rng: random.Random, bound: int = 50
) -> Dict[str, Fraction]:
    return {n: Fraction(rng.randint(1, bound), rng.randint(1, bound)) for n in names}


def sample_refutation(
    expr: RatFunc, rng: random.Random, samples: int
) -> Optional[Certificate]:
    names = expr.variables
    for _ in range(samples):
        point = random_positive_point(names, rng)
        try:
            value = expr.eval_at(point)
        except PoleError:
            continue
        if value <= 0:
            return Certificate(Positivity.NEGATIVE_WITNESS, witness=point, value=value)
    return None


def is_positive_laurent(
    expr: RatFunc,
    rng: Optional[random.Random] = None,
    samples: Optional[int] = None,
    factor_degree: Optional[int] = None,
) -> Certificate:
    if expr.is_zero():
        ones = {n: Fraction(1) for n in expr.field_variables}
        return Certificate(
            Positivity.NEGATIVE_WITNESS, witness=ones, value=Fraction(0), note="zero"
        )
    status = coefficient_scan(expr)
    if status is not None:
        return Certificate(status)
    factor_degree = (
        settings.POSITIVITY_FACTOR_DEGREE if factor_degree is None else factor_degree
    )
    if expr.variables:
        multiplier = factor_search(expr, factor_degree)
        if multiplier is not None:
            return Certificate(Positivity.POSITIVE_RATIO, multiplier=format_expr(multiplier))
    rng = rng or random.Random(settings.RNG_SEED)
    samples = settings.POSITIVITY_SAMPLES if samples is None else samples
    if not expr.variables:
        value = expr.constant_value()
        if value <= 0:
            return Certificate(Positivity.NEGATIVE_WITNESS, witness={}, value=value)
        return Certificate(Positivity.POSITIVE_RATIO)
    refutation = sample_refutation(expr, rng, samples)
    if refutation is not None:
        return refutation
    logger.info("positivity undecided for %s", format_expr(expr))
    return Certificate(Positivity.INDETERMINATE)
