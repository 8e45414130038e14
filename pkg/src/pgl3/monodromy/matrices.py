# src/pgl3/monodromy/matrices.py
"""3x3 matrices over the coordinate field.

``T(X)`` is attached to the sides of the little triangle inside a triangle
and ``E(Z, W)`` to the crossing of an edge. ``T(X)^3 = X``, so ``T(X)`` is of
order three in PGL(3).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy import Matrix, Rational

from pgl3.algebra.ratfunc import RatFunc, eval_at, format_expr
from pgl3.core.exceptions import DegenerateConfigurationError, InvalidInputError


Entry = Union[RatFunc, int, Fraction, str]


@dataclass(frozen=True)
class Matrix3:
    rows: Tuple[Tuple[RatFunc, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise InvalidInputError("a 3x3 matrix is required")

    @classmethod
    def of(cls, rows: Sequence[Sequence[Entry]]) -> "Matrix3":
        return cls(tuple(tuple(RatFunc.coerce(x) for x in r) for r in rows))

    @classmethod
    def identity(cls) -> "Matrix3":
        return cls.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def __getitem__(self, ij: Tuple[int, int]) -> RatFunc:
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other: "Matrix3") -> "Matrix3":
        if not isinstance(other, Matrix3):
            return Matrix3(tuple(tuple(x * other for x in r) for r in self.rows))
        return Matrix3(
            tuple(
                tuple(sum((self[i, k] * other[k, j] for k in range(3)), RatFunc.const(0)) for j in range(3))
                for i in range(3)
            )
        )

    def __pow__(self, n: int) -> "Matrix3":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Matrix3.identity(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix3) and all(
            self[i, j] == other[i, j] for i in range(3) for j in range(3)
        )

    def __hash__(self) -> int:
        return hash(tuple(self[i, j] for i in range(3) for j in range(3)))

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> RatFunc:
        if len(rows) == 1:
            return self[rows[0], cols[0]]
        if len(rows) == 2:
            (a, b), (c, d) = rows, cols
            return self[a, c] * self[b, d] - self[a, d] * self[b, c]
        return self.det()

    def minors(self) -> Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], RatFunc]:
        result = {}
        for k in (1, 2, 3):
            for rows in combinations(range(3), k):
                for cols in combinations(range(3), k):
                    result[(rows, cols)] = self.minor(rows, cols)
        return result

    def det(self) -> RatFunc:
        m = self
        return (
            m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
        )

    def adjugate(self) -> "Matrix3":
        cof = [[RatFunc.const(0)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                rows = [r for r in range(3) if r != i]
                cols = [c for c in range(3) if c != j]
                sign = -1 if (i + j) % 2 else 1
                cof[j][i] = self.minor(rows, cols) * sign
        return Matrix3(tuple(tuple(r) for r in cof))

    def inverse(self) -> "Matrix3":
        d = self.det()
        if d.is_zero():
            raise DegenerateConfigurationError("matrix is singular")
        return self.adjugate() * d.inverse()

    def trace(self) -> RatFunc:
        return self[0, 0] + self[1, 1] + self[2, 2]

    def is_scalar_multiple_of(self, other: "Matrix3") -> bool:
        """Equality in PGL(3)."""
        pivot = next(((i, j) for i in range(3) for j in range(3) if not other[i, j].is_zero()), None)
        if pivot is None or self[pivot].is_zero():
            return False
        ratio = self[pivot] / other[pivot]
        return self == other * ratio

    def is_upper_triangular(self) -> bool:
        return all(self[i, j].is_zero() for i in range(3) for j in range(i))

    def is_lower_triangular(self) -> bool:
        return all(self[i, j].is_zero() for i in range(3) for j in range(i + 1, 3))

    def specialize(self, point: Mapping[str, object]) -> "Matrix3":
        return Matrix3.of([[eval_at(self[i, j], point) for j in range(3)] for i in range(3)])

    def to_sympy(self) -> Matrix:
        entries = []
        for i in range(3):
            row = []
            for j in range(3):
                value = self[i, j].constant_value()
                row.append(Rational(value.numerator, value.denominator))
            entries.append(row)
        return Matrix(entries)

    def to_lists(self) -> List[List[str]]:
        return [[format_expr(self[i, j]) for j in range(3)] for i in range(3)]


def T(x: Entry) -> Matrix3:
    x = RatFunc.coerce(x)
    return Matrix3.of([[0, 0, 1], [0, -1, -1], [x, 1 + x, 1]])


def T_inv(x: Entry) -> Matrix3:
    """``T(X)^-1 = X^-1 T(X)^2``."""
    x = RatFunc.coerce(x)
    return T(x) ** 2 * x.inverse()


def E(z: Entry, w: Entry) -> Matrix3:
    z, w = RatFunc.coerce(z), RatFunc.coerce(w)
    return Matrix3.of([[0, 0, z.inverse()], [0, -1, 0], [w, 0, 0]])


def product(factors: Iterable[Matrix3]) -> Matrix3:
    """Left-to-right product along a path."""
    result = Matrix3.identity()
    for f in factors:
        result = result * f
    return result


def specialize(m: Matrix3, point: Mapping[str, object]) -> Matrix3:
    return m.specialize(point)
