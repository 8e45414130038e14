# src/pgl3/quantum/torus.py
"""Quantum torus of a seed.

Generators satisfy ``X_i X_j = q^(2 eps_ij) X_j X_i``. Elements are stored in
the Weyl normal ordering

    X^a = q^(-sum_{i<j} eps_ij a_i a_j) X_1^a_1 ... X_n^a_n

(vertex order of the seed), so that ``X^a X^b = q^<a,b> X^(a+b)`` with
``<a,b> = sum eps_ij a_i b_j`` and every ``X^a`` is fixed by the involution.
"""
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.seed import Seed
from pgl3.core.exceptions import InvalidInputError, SeedMismatchError


Exponent = Tuple[int, ...]


class QLaurent:
    """Laurent polynomial in q with integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Mapping[int, int]] = None) -> None:
        self._coeffs: Dict[int, int] = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def q(cls, k: int = 1, c: int = 1) -> "QLaurent":
        return cls({k: c})

    @classmethod
    def coerce(cls, value: Union["QLaurent", int]) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        if isinstance(value, int):
            return cls({0: value})
        raise TypeError(f"cannot use {value!r} as a coefficient")

    def items(self) -> List[Tuple[int, int]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_unit(self) -> bool:
        return len(self._coeffs) == 1 and abs(next(iter(self._coeffs.values()))) == 1

    def unit_inverse(self) -> "QLaurent":
        if not self.is_unit():
            raise InvalidInputError(f"{self} is not invertible over Z[q, 1/q]")
        ((k, c),) = self._coeffs.items()
        return QLaurent({-k: c})

    def __add__(self, other) -> "QLaurent":
        other = QLaurent.coerce(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other) -> "QLaurent":
        return self + (-QLaurent.coerce(other))

    def __mul__(self, other) -> "QLaurent":
        other = QLaurent.coerce(other)
        out: Dict[int, int] = {}
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other._coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return QLaurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QLaurent":
        return QLaurent({e + k: v for e, v in self._coeffs.items()})

    def star(self) -> "QLaurent":
        return QLaurent({-k: v for k, v in self._coeffs.items()})

    def at_one(self) -> int:
        return sum(self._coeffs.values())

    def evaluate(self, q: complex) -> complex:
        return sum(v * q**k for k, v in self._coeffs.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent.coerce(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in sorted(self._coeffs.items(), reverse=True):
            power = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not power:
                body = str(abs(v))
            elif abs(v) == 1:
                body = power
            else:
                body = f"{abs(v)}*{power}"
            parts.append(("- " if v < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@lru_cache(maxsize=64)
def _form(seed: Seed) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(row) for row in seed.matrix())


@lru_cache(maxsize=64)
def _positions(seed: Seed) -> Dict[str, int]:
    return {v: i for i, v in enumerate(seed.vertices)}


def pairing(seed: Seed, a: Exponent, b: Exponent) -> int:
    eps = _form(seed)
    support_a = [i for i, x in enumerate(a) if x]
    support_b = [j for j, y in enumerate(b) if y]
    return sum(eps[i][j] * a[i] * b[j] for i in support_a for j in support_b)


def ordering_shift(seed: Seed, a: Exponent) -> int:
    """q-exponent relating X^a to the ordered product of generator powers."""
    eps = _form(seed)
    support = [i for i, x in enumerate(a) if x]
    return -sum(
        eps[i][j] * a[i] * a[j] for k, i in enumerate(support) for j in support[k + 1:]
    )


class QTorusElem:
    """Finite sum of ``c(q) X^a`` over the quantum torus of ``seed``."""

    __slots__ = ("seed", "_terms")

    def __init__(self, seed: Seed, terms: Optional[Mapping[Exponent, QLaurent]] = None) -> None:
        self.seed = seed
        self._terms: Dict[Exponent, QLaurent] = {
            a: c for a, c in (terms or {}).items() if not c.is_zero()
        }

    # constructors

    @classmethod
    def constant(cls, seed: Seed, value: Union[QLaurent, int] = 1) -> "QTorusElem":
        return cls(seed, {(0,) * len(seed.vertices): QLaurent.coerce(value)})

    @classmethod
    def generator(cls, seed: Seed, name: str, power: int = 1) -> "QTorusElem":
        seed.check_vertex(name)
        a = [0] * len(seed.vertices)
        a[_positions(seed)[name]] = power
        return cls(seed, {tuple(a): QLaurent.q(0)})

    @classmethod
    def monomial(
        cls, seed: Seed, exponents: Mapping[str, int], coeff: Union[QLaurent, int] = 1
    ) -> "QTorusElem":
        a = [0] * len(seed.vertices)
        positions = _positions(seed)
        for name, k in exponents.items():
            seed.check_vertex(name)
            a[positions[name]] = k
        return cls(seed, {tuple(a): QLaurent.coerce(coeff)})

    # structure

    def terms(self) -> Iterator[Tuple[Exponent, QLaurent]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (self.is_monomial() and not any(next(iter(self._terms))))

    def is_one(self) -> bool:
        return self == QTorusElem.constant(self.seed)

    @property
    def variables(self) -> Tuple[str, ...]:
        used = {i for a in self._terms for i, x in enumerate(a) if x}
        return tuple(self.seed.vertices[i] for i in sorted(used))

    def _check(self, other: "QTorusElem") -> None:
        if self.seed is not other.seed and not self.seed.same_as(other.seed):
            raise SeedMismatchError("quantum torus elements over different seeds")
        if self.seed.vertices != other.seed.vertices:
            raise SeedMismatchError("quantum torus elements with different vertex orders")

    # arithmetic

    def __add__(self, other) -> "QTorusElem":
        if isinstance(other, (int, QLaurent)):
            other = QTorusElem.constant(self.seed, other)
        self._check(other)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out[a] + c if a in out else c
        return QTorusElem(self.seed, out)

    __radd__ = __add__

    def __neg__(self) -> "QTorusElem":
        return QTorusElem(self.seed, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other) -> "QTorusElem":
        if isinstance(other, (int, QLaurent)):
            other = QTorusElem.constant(self.seed, other)
        return self + (-other)

    def __rsub__(self, other) -> "QTorusElem":
        return (-self) + other

    def __mul__(self, other) -> "QTorusElem":
        if isinstance(other, (int, QLaurent)):
            c = QLaurent.coerce(other)
            return QTorusElem(self.seed, {a: v * c for a, v in self._terms.items()})
        self._check(other)
        out: Dict[Exponent, QLaurent] = {}
        for a, c1 in self._terms.items():
            for b, c2 in other._terms.items():
                ab = tuple(x + y for x, y in zip(a, b))
                value = (c1 * c2).shift(pairing(self.seed, a, b))
                out[ab] = out[ab] + value if ab in out else value
        return QTorusElem(self.seed, out)

    def __rmul__(self, other) -> "QTorusElem":
        if isinstance(other, (int, QLaurent)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "QTorusElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = QTorusElem.constant(self.seed)
        for _ in range(n):
            result = result * self
        return result

    def inverse(self) -> "QTorusElem":
        """Inverse of a monomial with unit coefficient."""
        if not self.is_monomial():
            raise InvalidInputError("only monomials are invertible in the quantum torus")
        ((a, c),) = self._terms.items()
        # X^a X^-a = X^0 since <a, a> = 0
        return QTorusElem(self.seed, {tuple(-x for x in a): c.unit_inverse()})

    def star(self) -> "QTorusElem":
        return QTorusElem(self.seed, {a: c.star() for a, c in self._terms.items()})

    def rebase(self, seed: Seed) -> "QTorusElem":
        """Same element over an equal seed listed in another vertex order."""
        if not seed.same_as(self.seed):
            raise SeedMismatchError("seeds differ")
        positions = _positions(self.seed)
        order = [positions[v] for v in seed.vertices]
        return QTorusElem(seed, {tuple(a[i] for i in order): c for a, c in self._terms.items()})

    # specializations

    def specialize_q1(self) -> RatFunc:
        total = RatFunc.const(0)
        for a, c in self._terms.items():
            term = RatFunc.const(c.at_one())
            for name, k in zip(self.seed.vertices, a):
                if k:
                    term = term * RatFunc.var(name) ** k
            total = total + term
        return total

    def evaluate(
        self,
        matrices: Mapping[str, np.ndarray],
        q: complex,
        inverses: Optional[Mapping[str, np.ndarray]] = None,
    ) -> np.ndarray:
        """Image under matrices satisfying the torus relations at ``q``."""
        dim = next(iter(matrices.values())).shape[0]
        result = np.zeros((dim, dim), dtype=complex)
        for a, c in self._terms.items():
            term = np.identity(dim, dtype=complex) * (c.evaluate(q) * q ** ordering_shift(self.seed, a))
            for name, k in zip(self.seed.vertices, a):
                if k > 0:
                    term = term @ np.linalg.matrix_power(matrices[name], k)
                elif k < 0:
                    inv = inverses[name] if inverses else np.linalg.inv(matrices[name])
                    term = term @ np.linalg.matrix_power(inv, -k)
            result = result + term
        return result

    # comparison and text

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTorusElem):
            return NotImplemented
        if not self.seed.same_as(other.seed):
            return False
        if self.seed.vertices != other.seed.vertices:
            other = other.rebase(self.seed)
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"QTorusElem({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for a, c in self.terms():
            symbol = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.seed.vertices, a)
                if k
            )
            if not symbol:
                parts.append(str(c))
                continue
            symbol = f"<{symbol}>"
            if c == 1:
                parts.append(symbol)
            elif c == -1:
                parts.append(f"-{symbol}")
            elif len(c.items()) == 1:
                parts.append(f"{c}*{symbol}")
            else:
                parts.append(f"({c})*{symbol}")
        return " + ".join(parts).replace("+ -", "- ")


def qmul(x: QTorusElem, y: QTorusElem) -> QTorusElem:
    return x * y


def star(x: QTorusElem) -> QTorusElem:
    return x.star()


def ordered_product(seed: Seed, names: Sequence[str], coeff: Union[QLaurent, int] = 1) -> QTorusElem:
    """The product ``X_names[0] X_names[1] ...`` taken in the given order."""
    result = QTorusElem.constant(seed, coeff)
    for name in names:
        result = result * QTorusElem.generator(seed, name)
    return result
