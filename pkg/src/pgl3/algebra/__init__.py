from pgl3.algebra.parser import parse_expr
from pgl3.algebra.positivity import Certificate, Positivity, is_positive_laurent
from pgl3.algebra.ratfunc import (
    LaurentExpr,
    Rat,
    RatFunc,
    as_laurent,
    const,
    derivative,
    eval_at,
    format_expr,
    substitute,
    var,
)

__all__ = [
    "Certificate",
    "LaurentExpr",
    "Positivity",
    "Rat",
    "RatFunc",
    "as_laurent",
    "const",
    "derivative",
    "eval_at",
    "format_expr",
    "is_positive_laurent",
    "parse_expr",
    "substitute",
    "var",
]
