# src/pgl3/monodromy/traces.py
import itertools
import logging
from dataclasses import dataclass
from typing import Optional

from pgl3.algebra.positivity import Certificate, Positivity, is_positive_laurent
from pgl3.algebra.ratfunc import RatFunc, format_expr
from pgl3.monodromy.graph import LoopWord, MonodromyGraph


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceResult:
    power: int
    trace: RatFunc
    certificate: Certificate

    @property
    def integral(self) -> bool:
        if not self.trace.is_laurent():
            return False
        return all(c.denominator == 1 for _, c in self.trace.laurent_terms())

    def to_dict(self) -> dict:
        return {
            "power": self.power,
            "trace": format_expr(self.trace),
            "integral": self.integral,
            "certificate": self.certificate.to_dict(),
        }


def trace_of_power(graph: MonodromyGraph, loop: LoopWord, n: int) -> TraceResult:
    """Trace of the n-th power of the monodromy, products of the matrices as given."""
    if n < 1:
        raise ValueError("power must be at least one")
    trace = (graph.monodromy(loop) ** n).trace()
    return TraceResult(n, trace, is_positive_laurent(trace))


@dataclass(frozen=True)
class Decomposition:
    first: RatFunc
    second: RatFunc

    def to_dict(self) -> dict:
        return {"first": format_expr(self.first), "second": format_expr(self.second)}


def trace_decomposition_search(trace: RatFunc, max_factors: int = 12) -> Optional[Decomposition]:
    """Split a positive Laurent polynomial into two nonconstant positive factors.

    Irreducible factors of the numerator are grouped in every possible way; the
    monomial denominator goes with the first group. Experimental: a negative
    answer says nothing beyond the factors tried.
    """
    if not trace.is_laurent():
        return None
    content, factors = trace.numer.factor_list()
    pieces = [f for f, k in factors for _ in range(k)]
    if len(pieces) > max_factors:
        logger.info("too many factors (%d) to search", len(pieces))
        return None
    denom = trace.denom
    field = trace.field
    for mask in itertools.product((0, 1), repeat=len(pieces)):
        if not any(mask) or all(mask):
            continue
        left = field.ring.one * content
        right = field.ring.one
        for bit, f in zip(mask, pieces):
            if bit:
                left = left * f
            else:
                right = right * f
        first = RatFunc(field.new(left, denom))
        second = RatFunc(field.new(right, field.ring.one))
        if first.is_constant() or second.is_constant():
            continue
        if is_positive_laurent(first, samples=0).status is Positivity.POSITIVE_LAURENT and (
            is_positive_laurent(second, samples=0).status is Positivity.POSITIVE_LAURENT
        ):
            return Decomposition(first, second)
    return None
