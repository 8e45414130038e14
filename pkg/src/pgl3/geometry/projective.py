# src/pgl3/geometry/projective.py
"""Exact homogeneous coordinates in the projective plane.

Points and lines are both triples of rationals; a point ``P`` lies on a line
``l`` when ``l . P = 0``. Brackets of elements sharing a common element
``c`` (collinear points on the line ``c``, concurrent lines through the
point ``c``) are ``[ij] = (x_i x x_j) . c``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Tuple

from sympy import Matrix, Rational

from pgl3.core.exceptions import DegenerateConfigurationError, InvalidInputError


Vec = Tuple[Fraction, Fraction, Fraction]


def vec(values: Iterable) -> Vec:
    items = tuple(Fraction(v) for v in values)
    if len(items) != 3:
        raise InvalidInputError("homogeneous coordinates need three entries")
    if not any(items):
        raise InvalidInputError("homogeneous coordinates must not all vanish")
    return items


def cross(u: Sequence, v: Sequence) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u: Sequence, v: Sequence) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u: Sequence, v: Sequence, w: Sequence) -> Fraction:
    return dot(cross(u, v), w)


def scale(c, u: Sequence) -> Vec:
    return tuple(c * x for x in u)


def add(u: Sequence, v: Sequence) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def is_zero(u: Sequence) -> bool:
    return not any(u)


def meet(u: Sequence, v: Sequence) -> Vec:
    """Intersection of two lines, or line through two points."""
    w = cross(u, v)
    if is_zero(w):
        raise DegenerateConfigurationError("elements coincide")
    return w


def same_element(u: Sequence, v: Sequence) -> bool:
    return is_zero(cross(u, v))


def primitive(u: Sequence) -> Tuple[int, int, int]:
    """Integer representative with coprime entries."""
    fracs = [Fraction(x) for x in u]
    lcm = reduce(lambda a, b: a * b // gcd(a, b), (f.denominator for f in fracs), 1)
    ints = [int(f * lcm) for f in fracs]
    g = reduce(gcd, (abs(i) for i in ints), 0) or 1
    return tuple(i // g for i in ints)


def bracket(u: Sequence, v: Sequence, common: Sequence) -> Fraction:
    return dot(cross(u, v), common)


def cross_ratio(x1: Sequence, x2: Sequence, x3: Sequence, x4: Sequence) -> Fraction:
    """``[12][34] / ([14][23])`` for four collinear points or four concurrent lines.

    In an affine parameter this is ``(x1 - x2)(x3 - x4) / ((x1 - x4)(x2 - x3))``,
    so (x1, x2, x3) go to (infinity, -1, 0).
    """
    xs = [vec(x) for x in (x1, x2, x3, x4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if same_element(xs[i], xs[j]):
                raise DegenerateConfigurationError("cross-ratio of repeated elements")
    common = cross(xs[0], xs[1])
    for x in xs[2:]:
        if dot(common, x) != 0:
            raise DegenerateConfigurationError("elements are not collinear or concurrent")
    b12, b34 = bracket(xs[0], xs[1], common), bracket(xs[2], xs[3], common)
    b14, b23 = bracket(xs[0], xs[3], common), bracket(xs[1], xs[2], common)
    return b12 * b34 / (b14 * b23)


def solve_fourth(x1: Sequence, x2: Sequence, x3: Sequence, ratio, common: Sequence) -> Vec:
    """The element ``x4`` with ``cross_ratio(x1, x2, x3, x4) = ratio``."""
    b12 = bracket(x1, x2, common)
    b23 = bracket(x2, x3, common)
    x4 = add(scale(b12, x3), scale(-Fraction(ratio) * b23, x1))
    if is_zero(x4):
        raise DegenerateConfigurationError("cross-ratio equation has no solution")
    return x4


@dataclass(frozen=True)
class Flag:
    point: Vec
    line: Vec

    def __post_init__(self) -> None:
        if dot(self.point, self.line) != 0:
            raise InvalidInputError("flag point does not lie on its line")

    @classmethod
    def of(cls, point: Iterable, line: Iterable) -> "Flag":
        return cls(vec(point), vec(line))

    def transformed(self, m: Matrix) -> "Flag":
        return Flag(apply(m, self.point), apply(m.adjugate().T, self.line))


def triple_ratio(f1: Flag, f2: Flag, f3: Flag) -> Fraction:
    """``a(B) b(C) c(A) / (a(C) b(A) c(B))`` for flags (A, a), (B, b), (C, c)."""
    (A, a), (B, b), (C, c) = (f1.point, f1.line), (f2.point, f2.line), (f3.point, f3.line)
    num = dot(a, B) * dot(b, C) * dot(c, A)
    den = dot(a, C) * dot(b, A) * dot(c, B)
    if num == 0 or den == 0:
        raise DegenerateConfigurationError("flags are not in general position")
    return num / den


def triple_ratio_via_lines(f1: Flag, f2: Flag, f3: Flag) -> Fraction:
    """Cross-ratio of the lines a, AB, A(b meet c), AC through A."""
    A, a = f1.point, f1.line
    lines = (a, meet(A, f2.point), meet(A, meet(f2.line, f3.line)), meet(A, f3.point))
    return cross_ratio(*lines)


def canonical_triangle(x) -> Tuple[Flag, Flag, Flag]:
    """Three flags with triple ratio ``x`` in the standard frame."""
    x = Fraction(x)
    if x == 0 or x == -1:
        raise DegenerateConfigurationError(f"no flag triangle with triple ratio {x}")
    return (
        Flag.of((1, -1, 1), (1, 1 + x, x)),
        Flag.of((0, 0, 1), (1, 0, 0)),
        Flag.of((1, 0, 0), (0, 0, 1)),
    )


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return Matrix([[Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows])


def apply(m: Matrix, u: Sequence) -> Vec:
    column = m * Matrix([Rational(Fraction(x).numerator, Fraction(x).denominator) for x in u])
    return tuple(Fraction(int(e.p), int(e.q)) for e in column)
