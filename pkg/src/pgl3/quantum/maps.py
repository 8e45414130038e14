# src/pgl3/quantum/maps.py
"""Quantum cluster transformations with formal denominators.

An image is an ordered product of factors ``f`` or ``f^-1`` with ``f`` in the
quantum torus of the source seed. Inverses of non-monomials are never expanded.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from pgl3.algebra.ratfunc import RatFunc
from pgl3.cluster.mutation import ClusterMap, mutate_epsilon
from pgl3.cluster.seed import Seed
from pgl3.core.exceptions import InvalidInputError, NotLaurentError, SeedMismatchError
from pgl3.quantum.torus import QLaurent, QTorusElem, ordering_shift


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factor:
    elem: QTorusElem
    power: int = 1

    def __post_init__(self) -> None:
        if self.power not in (1, -1):
            raise InvalidInputError("factor powers are 1 or -1")

    def inverted(self) -> "Factor":
        return Factor(self.elem, -self.power)

    def is_monomial(self) -> bool:
        return self.power == 1 and self.elem.is_monomial()

    def specialize_q1(self) -> RatFunc:
        return self.elem.specialize_q1() ** self.power

    def __str__(self) -> str:
        body = str(self.elem)
        if not self.elem.is_monomial():
            body = f"({body})"
        elif self.power == -1 and not body.startswith("<"):
            body = f"({body})"
        return body if self.power == 1 else f"{body}^-1"


QProduct = Tuple[Factor, ...]


def _unit_monomial(elem: QTorusElem) -> bool:
    if not elem.is_monomial():
        return False
    ((_, c),) = elem.terms()
    return c.is_unit()


def normalize(factors: Sequence[Factor]) -> QProduct:
    """Merge adjacent monomials and cancel adjacent ``f f^-1`` pairs."""
    stack: List[Factor] = []
    for f in factors:
        if f.power == -1 and _unit_monomial(f.elem):
            f = Factor(f.elem.inverse())
        if f.power == 1 and f.elem.is_one():
            continue
        if stack and f.is_monomial() and stack[-1].is_monomial():
            merged = stack.pop().elem * f.elem
            if not merged.is_one():
                stack.append(Factor(merged))
            continue
        if stack and stack[-1].power == -f.power and stack[-1].elem == f.elem:
            stack.pop()
            continue
        stack.append(f)
    return tuple(stack)


def invert(factors: Sequence[Factor]) -> List[Factor]:
    return [f.inverted() for f in reversed(factors)]


def laurent_value(factors: Sequence[Factor]) -> QTorusElem:
    """Expand a product whose only inverses are monomials."""
    if not factors:
        raise InvalidInputError("empty product")
    result = QTorusElem.constant(factors[0].elem.seed)
    for f in factors:
        if f.power == 1:
            result = result * f.elem
        elif _unit_monomial(f.elem):
            result = result * f.elem.inverse()
        else:
            raise NotLaurentError(f"factor {f} is not a Laurent monomial")
    return result


def format_product(factors: Sequence[Factor]) -> str:
    if not factors:
        return "1"
    return " * ".join(str(f) for f in factors)


def star_invariant(factors: Sequence[Factor]) -> bool:
    """Whether ``L D^-1`` is fixed by the involution, checked as ``*(D) L = *(L) D``."""
    split = next((i for i, f in enumerate(factors) if f.power == -1), len(factors))
    if any(f.power == 1 for f in factors[split:]):
        raise NotLaurentError("denominators must trail the product")
    numer = laurent_value(factors[:split]) if split else None
    denominators = [f.elem for f in reversed(factors[split:])]
    seed = factors[0].elem.seed
    if numer is None:
        numer = QTorusElem.constant(seed)
    denom = QTorusElem.constant(seed)
    for d in denominators:
        denom = denom * d
    return denom.star() * numer == numer.star() * denom


@dataclass(frozen=True)
class QRationalMap:
    """``images[v]`` expresses target generator ``v`` through source generators."""

    source: Seed
    target: Seed
    images: Mapping[str, QProduct]
    steps: Tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if set(self.images) != set(self.target.vertices):
            raise InvalidInputError("images must cover the target vertices")

    def image(self, v: str) -> QProduct:
        return self.images[v]

    def support(self, v: str) -> FrozenSet[str]:
        return frozenset(name for f in self.images[v] for name in f.elem.variables)

    def is_identity(self) -> bool:
        if set(self.source.vertices) != set(self.target.vertices):
            return False
        return all(
            self.images[v] == (Factor(QTorusElem.generator(self.source, v)),)
            for v in self.target.vertices
        )

    def is_star_equivariant(self) -> bool:
        return all(star_invariant(self.images[v]) for v in self.target.vertices)

    def specialize_q1(self) -> ClusterMap:
        images: Dict[str, RatFunc] = {}
        for v in self.target.vertices:
            value = RatFunc.const(1)
            for f in self.images[v]:
                value = value * f.specialize_q1()
            images[v] = value
        return ClusterMap(self.source, self.target, images, steps=self.steps)

    def formulas(self) -> Dict[str, str]:
        return {v: format_product(self.images[v]) for v in self.target.vertices}

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "images": self.formulas(),
            "steps": list(self.steps),
        }


def specialize_q1(qmap: QRationalMap) -> ClusterMap:
    return qmap.specialize_q1()


def _generator(seed: Seed, v: str, power: int = 1) -> Factor:
    return Factor(QTorusElem.generator(seed, v, power))


def identity_map(seed: Seed) -> QRationalMap:
    return QRationalMap(seed, seed, {v: (_generator(seed, v),) for v in seed.vertices})


def relabel(seed: Seed, bijection: Mapping[str, str]) -> QRationalMap:
    if set(bijection) != set(seed.vertices):
        raise InvalidInputError("bijection must be defined on every vertex")
    if len(set(bijection.values())) != len(bijection):
        raise InvalidInputError("relabeling is not injective")
    images = {bijection[v]: (_generator(seed, v),) for v in seed.vertices}
    return QRationalMap(seed, seed.rename(bijection), images, steps=("relabel",))


def quantum_mutation(seed: Seed, k: str) -> QRationalMap:
    seed.check_vertex(k)
    x_k = QTorusElem.generator(seed, k)
    x_k_inv = QTorusElem.generator(seed, k, -1)
    images: Dict[str, QProduct] = {}
    for i in seed.vertices:
        if i == k:
            images[i] = (Factor(x_k_inv),)
            continue
        e_ik = seed.eps(i, k)
        factors = [_generator(seed, i)]
        if e_ik <= 0:
            factors.extend(Factor(1 + x_k * QLaurent.q(2 * r - 1)) for r in range(1, -e_ik + 1))
        else:
            factors.extend(
                Factor(1 + x_k_inv * QLaurent.q(2 * r - 1), -1) for r in range(e_ik, 0, -1)
            )
        images[i] = tuple(factors)
    logger.debug("quantum mutation at %s", k)
    return QRationalMap(seed, mutate_epsilon(seed, k), images, steps=(f"mutate:{k}",))


def _substitute_factor(f: Factor, first: QRationalMap) -> List[Factor]:
    elem = f.elem
    if elem.is_monomial():
        ((a, c),) = elem.terms()
        out = [Factor(QTorusElem.constant(first.source, c.shift(ordering_shift(elem.seed, a))))]
        for name, k in zip(elem.seed.vertices, a):
            if not k:
                continue
            image = list(first.images[name])
            out.extend((image if k > 0 else invert(image)) * abs(k))
        return out if f.power == 1 else invert(out)
    return [Factor(_expand(elem, first), f.power)]


def _expand(elem: QTorusElem, first: QRationalMap) -> QTorusElem:
    total = QTorusElem.constant(first.source, 0)
    values: Dict[str, QTorusElem] = {}
    for a, c in elem.terms():
        term = QTorusElem.constant(first.source, c.shift(ordering_shift(elem.seed, a)))
        for name, k in zip(elem.seed.vertices, a):
            if not k:
                continue
            if name not in values:
                values[name] = laurent_value(first.images[name])
            value = values[name]
            term = term * (value**k if k > 0 else value.inverse() ** (-k))
        total = total + term
    return total


def substitute(factors: Sequence[Factor], first: QRationalMap) -> QProduct:
    out: List[Factor] = []
    for f in factors:
        out.extend(_substitute_factor(f, first))
    return normalize(out)


def compose(first: QRationalMap, second: QRationalMap) -> QRationalMap:
    """Apply ``first`` and then ``second``."""
    if not first.target.same_as(second.source):
        raise SeedMismatchError("maps are not composable: seeds differ")
    images = {v: substitute(second.images[v], first) for v in second.target.vertices}
    return QRationalMap(first.source, second.target, images, steps=first.steps + second.steps)


def compose_all(maps: Sequence[QRationalMap]) -> QRationalMap:
    result = maps[0]
    for m in maps[1:]:
        result = compose(result, m)
    return result


def mutation_chain(seed: Seed, sequence: Sequence[str]) -> List[QRationalMap]:
    """Quantum mutations in order, each over the seed left by the previous one."""
    chain: List[QRationalMap] = []
    current = seed
    for k in sequence:
        step = quantum_mutation(current, k)
        chain.append(step)
        current = step.target
    return chain
