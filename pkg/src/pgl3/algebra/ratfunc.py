# src/pgl3/algebra/ratfunc.py
"""Exact rational functions in named variables.

A :class:`RatFunc` wraps an element of a sparse sympy fraction field over QQ.
Fields are created on demand for the sorted tuple of variable names an element
lives in; binary operations lift both operands into the field over the union of
their names. Variables are always ordered by :func:`variable_key`, so lifting
never changes the relative order of monomials and reduced forms stay canonical.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField
from sympy.polys.orderings import lex

from pgl3.core.exceptions import DenominatorVanishesError, ParseError, PoleError


Rat = Fraction
Scalar = Union[int, Fraction]
Monomial = Tuple[int, ...]

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_:@.]*\Z")
_DIGITS = re.compile(r"(\d+)")


def variable_key(name: str) -> tuple:
    """Natural sort key: ``x2`` sorts before ``x10``."""
    return tuple(int(p) if p.isdigit() else p for p in _DIGITS.split(name))


def sort_variables(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=variable_key))


@lru_cache(maxsize=None)
def field_for(names: Tuple[str, ...]) -> FracField:
    return FracField(tuple(Symbol(n) for n in names), QQ, lex)


def to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def to_qq(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _names_of(field: FracField) -> Tuple[str, ...]:
    return tuple(str(s) for s in field.symbols)


def _lift_poly(poly, positions: List[int], ring):
    width = ring.ngens
    terms = {}
    for monom, coeff in poly.items():
        lifted = [0] * width
        for i, e in enumerate(monom):
            lifted[positions[i]] = e
        terms[tuple(lifted)] = coeff
    return ring.from_dict(terms)


def _lift(elem: FracElement, target: FracField) -> FracElement:
    if elem.field == target:
        return elem
    names = _names_of(target)
    positions = [names.index(n) for n in _names_of(elem.field)]
    numer = _lift_poly(elem.numer, positions, target.ring)
    denom = _lift_poly(elem.denom, positions, target.ring)
    return target.raw_new(numer, denom)


def _common_field(fields: Iterable[FracField]) -> FracField:
    names: set = set()
    for f in fields:
        names.update(_names_of(f))
    return field_for(sort_variables(names))


class RatFunc:
    """Reduced quotient of two polynomials with rational coefficients."""

    __slots__ = ("_elem",)

    def __init__(self, elem: FracElement) -> None:
        self._elem = elem

    @classmethod
    def var(cls, name: str) -> "RatFunc":
        if not IDENTIFIER.match(name):
            raise ParseError(f"invalid variable name {name!r}")
        return cls(field_for((name,)).gens[0])

    @classmethod
    def const(cls, value: Scalar) -> "RatFunc":
        field = field_for(())
        return cls(field.ground_new(to_qq(value)))

    @classmethod
    def coerce(cls, value: Union["RatFunc", Scalar, str]) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, str):
            return cls.var(value)
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"cannot interpret {value!r} as a rational function")

    # structure

    @property
    def field(self) -> FracField:
        return self._elem.field

    @property
    def numer(self):
        return self._elem.numer

    @property
    def denom(self):
        return self._elem.denom

    @property
    def field_variables(self) -> Tuple[str, ...]:
        return _names_of(self._elem.field)

    @property
    def variables(self) -> Tuple[str, ...]:
        """Names that actually occur in the reduced form."""
        names = self.field_variables
        used = set()
        for poly in (self._elem.numer, self._elem.denom):
            for monom in poly.keys():
                used.update(i for i, e in enumerate(monom) if e)
        return tuple(names[i] for i in sorted(used))

    def is_zero(self) -> bool:
        return not self._elem.numer

    def is_constant(self) -> bool:
        return not self.variables

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        num = self._elem.numer
        den = self._elem.denom
        if not num:
            return Fraction(0)
        return to_fraction(num.LC) / to_fraction(den.LC)

    def is_laurent(self) -> bool:
        return len(self._elem.denom) == 1

    def terms(self, poly=None) -> List[Tuple[Monomial, Fraction]]:
        """Terms of a polynomial part in canonical (lex descending) order."""
        poly = self._elem.numer if poly is None else poly
        return [(m, to_fraction(c)) for m, c in sorted(poly.items(), reverse=True)]

    def laurent_terms(self) -> List[Tuple[Monomial, Fraction]]:
        """Terms of the Laurent polynomial; requires a monomial denominator."""
        if not self.is_laurent():
            raise ValueError("denominator is not a monomial")
        ((shift, scale),) = self._elem.denom.items()
        scale = to_fraction(scale)
        return [
            (tuple(a - b for a, b in zip(m, shift)), c / scale)
            for m, c in self.terms()
        ]

    # arithmetic

    def _pair(self, other) -> Tuple[FracElement, FracElement]:
        other = RatFunc.coerce(other)
        if self._elem.field == other._elem.field:
            return self._elem, other._elem
        field = _common_field((self._elem.field, other._elem.field))
        return _lift(self._elem, field), _lift(other._elem, field)

    def __add__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        return RatFunc(a + b)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        return RatFunc(a - b)

    def __rsub__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        return RatFunc(b - a)

    def __mul__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        return RatFunc(a * b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        if not b:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(a / b)

    def __rtruediv__(self, other) -> "RatFunc":
        a, b = self._pair(other)
        if not a:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(b / a)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0 and self.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return RatFunc(self._elem**n)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self._elem)

    def inverse(self) -> "RatFunc":
        return self**-1

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RatFunc, int, Fraction)):
            return NotImplemented
        a, b = self._pair(other)
        return a.numer == b.numer and a.denom == b.denom

    def __hash__(self) -> int:
        names = self.field_variables
        keep = [names.index(v) for v in self.variables]

        def squeeze(poly):
            return frozenset(
                (tuple(m[i] for i in keep), to_fraction(c)) for m, c in poly.items()
            )

        return hash((self.variables, squeeze(self.numer), squeeze(self.denom)))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({format_expr(self)!r})"

    def __str__(self) -> str:
        return format_expr(self)

    # homomorphisms

    def substitute(self, assignment: Mapping[str, "RatFunc"]) -> "RatFunc":
        return substitute(self, assignment)

    def eval_at(self, point: Mapping[str, Scalar]) -> Fraction:
        return eval_at(self, point)

    def derivative(self, name: str) -> "RatFunc":
        return derivative(self, name)


def var(name: str) -> RatFunc:
    return RatFunc.var(name)


def const(value: Scalar) -> RatFunc:
    return RatFunc.const(value)


def _poly_at(poly, numers, denoms, ring):
    """Evaluate ``poly`` at ``numers[i] / denoms[i]`` over a common denominator."""
    if not poly:
        return ring.zero, ring.one
    n = len(numers)
    degrees = [max(m[i] for m in poly.keys()) for i in range(n)]
    num_powers: Dict[Tuple[int, int], object] = {}
    den_powers: Dict[Tuple[int, int], object] = {}

    def power(table, base, i, e):
        key = (i, e)
        if key not in table:
            table[key] = base[i] ** e
        return table[key]

    total = ring.zero
    for monom, coeff in poly.items():
        term = ring.ground_new(coeff)
        for i, e in enumerate(monom):
            if degrees[i] == 0:
                continue
            if e:
                term = term * power(num_powers, numers, i, e)
            if degrees[i] - e:
                term = term * power(den_powers, denoms, i, degrees[i] - e)
        total += term
    common = ring.one
    for i, d in enumerate(degrees):
        if d:
            common = common * power(den_powers, denoms, i, d)
    return total, common


def substitute(expr: RatFunc, assignment: Mapping[str, Union[RatFunc, Scalar, str]]) -> RatFunc:
    """Simultaneous substitution of the variables of ``expr``.

    Variables without an image are mapped to themselves.
    """
    names = expr.field_variables
    if not names:
        return expr
    images = [RatFunc.coerce(assignment.get(n, n)) for n in names]
    target = _common_field(img.field for img in images)
    lifted = [_lift(img._elem, target) for img in images]
    numers = [e.numer for e in lifted]
    denoms = [e.denom for e in lifted]
    ring = target.ring
    pn, pd = _poly_at(expr.numer, numers, denoms, ring)
    qn, qd = _poly_at(expr.denom, numers, denoms, ring)
    if not qn:
        raise DenominatorVanishesError()
    return RatFunc(target.new(pn * qd, pd * qn))


def _value_at(poly, names, point: Mapping[str, Fraction]) -> Fraction:
    values = []
    for n in names:
        if n not in point:
            raise KeyError(n)
        values.append(Fraction(point[n]))
    total = Fraction(0)
    for monom, coeff in poly.items():
        term = to_fraction(coeff)
        for v, e in zip(values, monom):
            if e:
                term *= v**e
        total += term
    return total


def eval_at(expr: RatFunc, point: Mapping[str, Scalar]) -> Fraction:
    """Exact value at a rational point; only occurring variables are required."""
    names = expr.field_variables
    used = set(expr.variables)
    full = {n: (Fraction(point[n]) if n in used else Fraction(1)) for n in names}
    missing = used - set(point)
    if missing:
        raise KeyError(sorted(missing, key=variable_key)[0])
    den = _value_at(expr.denom, names, full)
    if den == 0:
        raise PoleError(
            format_poly(expr.denom, names),
            {n: str(full[n]) for n in sorted(used, key=variable_key)},
        )
    return _value_at(expr.numer, names, full) / den


def derivative(expr: RatFunc, name: str) -> RatFunc:
    names = expr.field_variables
    if name not in names:
        return RatFunc.const(0)
    field = expr.field
    x = field.ring.gens[names.index(name)]
    num, den = expr.numer, expr.denom
    return RatFunc(field.new(num.diff(x) * den - num * den.diff(x), den**2))


# text form


def _format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: List[Tuple[Monomial, Fraction]], names: Tuple[str, ...]) -> str:
    if not terms:
        return "0"
    pieces: List[str] = []
    for monom, coeff in terms:
        factors = []
        for n, e in zip(names, monom):
            if e == 1:
                factors.append(n)
            elif e:
                factors.append(f"{n}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = " * ".join(factors)
        else:
            body = " * ".join([_format_coefficient(magnitude)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def format_poly(poly, names: Tuple[str, ...]) -> str:
    terms = [(m, to_fraction(c)) for m, c in sorted(poly.items(), reverse=True)]
    return format_terms(terms, names)


def format_expr(expr: RatFunc) -> str:
    """Canonical text: a Laurent polynomial, or ``(num) / (den)``."""
    names = expr.field_variables
    if expr.is_laurent():
        return format_terms(expr.laurent_terms(), names)
    return f"({format_poly(expr.numer, names)}) / ({format_poly(expr.denom, names)})"


@dataclass(frozen=True)
class LaurentExpr:
    """Laurent polynomial with exponent vectors over ``variables``."""

    variables: Tuple[str, ...]
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    @classmethod
    def from_ratfunc(cls, expr: RatFunc) -> "LaurentExpr":
        if not expr.is_laurent():
            raise ValueError("denominator is not a monomial")
        names = expr.field_variables
        keep = [names.index(v) for v in expr.variables]
        terms = tuple(
            (tuple(m[i] for i in keep), c) for m, c in expr.laurent_terms()
        )
        return cls(expr.variables, terms)

    def to_ratfunc(self) -> RatFunc:
        total = RatFunc.const(0)
        gens = [RatFunc.var(v) for v in self.variables]
        for monom, coeff in self.terms:
            term = RatFunc.const(coeff)
            for g, e in zip(gens, monom):
                if e:
                    term = term * g**e
            total = total + term
        return total

    def coefficients(self) -> Iterator[Fraction]:
        return (c for _, c in self.terms)

    def __str__(self) -> str:
        return format_terms(list(self.terms), self.variables)


def as_laurent(expr: RatFunc) -> LaurentExpr:
    return LaurentExpr.from_ratfunc(expr)
