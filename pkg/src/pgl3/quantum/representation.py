# src/pgl3/quantum/representation.py
import cmath
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, isprime

from pgl3.cluster.seed import Seed
from pgl3.core.config import settings
from pgl3.core.exceptions import InvalidInputError, PoleError, RepresentationTooLargeError
from pgl3.quantum.maps import Factor, QRationalMap


logger = logging.getLogger(__name__)


def _form_mod(seed: Seed, n: int, u: List[int], v: List[int]) -> int:
    eps = seed.matrix()
    size = len(u)
    return sum(u[i] * eps[i][j] * v[j] for i in range(size) if u[i] for j in range(size)) % n


def symplectic_basis(seed: Seed, n: int) -> Tuple[List[Tuple[List[int], List[int]]], List[List[int]]]:
    """Darboux pairs ``(u, v)`` with ``eps(u, v) = 1`` mod n, and a kernel basis."""
    size = len(seed.vertices)
    remaining = [[int(i == j) for j in range(size)] for i in range(size)]
    pairs: List[Tuple[List[int], List[int]]] = []
    while True:
        found = None
        for a, x in enumerate(remaining):
            for b, y in enumerate(remaining):
                if a != b and _form_mod(seed, n, x, y):
                    found = (a, b)
                    break
            if found:
                break
        if not found:
            return pairs, remaining
        a, b = found
        u = remaining[a]
        scale = pow(_form_mod(seed, n, u, remaining[b]), -1, n)
        v = [(scale * t) % n for t in remaining[b]]
        rest = []
        for c, w in enumerate(remaining):
            if c in (a, b):
                continue
            wu = _form_mod(seed, n, w, u)
            wv = _form_mod(seed, n, w, v)
            rest.append([(w[i] - wv * u[i] + wu * v[i]) % n for i in range(size)])
        pairs.append((u, v))
        remaining = rest


def _clock_shift(n: int, omega: complex) -> Tuple[np.ndarray, np.ndarray]:
    clock = np.diag([omega**j for j in range(n)])
    shift = np.roll(np.identity(n, dtype=complex), 1, axis=0)
    return clock, shift


@dataclass
class Representation:
    """Matrices of the generators with ``M_i M_j = q^(2 eps_ij) M_j M_i``."""

    seed: Seed
    order: int
    q: complex
    matrices: Dict[str, np.ndarray]
    inverses: Dict[str, np.ndarray]

    @property
    def dimension(self) -> int:
        return next(iter(self.matrices.values())).shape[0]

    def relation_residual(self) -> float:
        worst = 0.0
        for i in self.seed.vertices:
            for j in self.seed.vertices:
                lhs = self.matrices[i] @ self.matrices[j]
                rhs = self.q ** (2 * self.seed.eps(i, j)) * self.matrices[j] @ self.matrices[i]
                worst = max(worst, float(np.linalg.norm(lhs - rhs, 2)))
        return worst


def clock_shift_representation(
    seed: Seed,
    n: int,
    q: Optional[complex] = None,
    twists: Optional[Mapping[str, float]] = None,
    cap: Optional[int] = None,
) -> Representation:
    """Tensor products of clock and shift matrices over a Darboux basis mod n."""
    if n < 3 or not isprime(n):
        raise InvalidInputError("the order must be an odd prime")
    q = cmath.exp(2j * cmath.pi / n) if q is None else q
    if abs(q**n - 1) > settings.TOLERANCE or any(abs(q**k - 1) < settings.TOLERANCE for k in range(1, n)):
        raise InvalidInputError(f"q is not a primitive root of unity of order {n}")
    cap = cap or settings.REPRESENTATION_CAP
    pairs, kernel = symplectic_basis(seed, n)
    if n ** len(pairs) > cap:
        raise RepresentationTooLargeError(
            f"representation of dimension {n}^{len(pairs)} exceeds the cap", cap=cap
        )
    basis = [w for u, v in pairs for w in (u, v)] + kernel
    coords = Matrix(basis).T.inv_mod(n)
    clock, shift = _clock_shift(n, q**2)
    twists = twists or {}
    matrices: Dict[str, np.ndarray] = {}
    for col, name in enumerate(seed.vertices):
        m = np.identity(1, dtype=complex)
        for k in range(len(pairs)):
            a, b = int(coords[2 * k, col]), int(coords[2 * k + 1, col])
            block = np.linalg.matrix_power(clock, a) @ np.linalg.matrix_power(shift, b)
            m = np.kron(m, block)
        matrices[name] = m * twists.get(name, 1.0)
    inverses = {name: np.linalg.inv(m) for name, m in matrices.items()}
    logger.debug("clock-shift representation of dimension %d", n ** len(pairs))
    return Representation(seed, n, q, matrices, inverses)


def evaluate_product(factors: Sequence[Factor], rep: Representation) -> np.ndarray:
    result = np.identity(rep.dimension, dtype=complex)
    for f in factors:
        value = f.elem.evaluate(rep.matrices, rep.q, rep.inverses)
        if f.power == -1:
            if np.linalg.cond(value) > settings.CONDITION_CAP:
                raise PoleError(str(f.elem))
            value = np.linalg.inv(value)
        result = result @ value
    return result


def evaluate(qmap: QRationalMap, rep: Representation) -> Dict[str, np.ndarray]:
    """Matrices of the target generators."""
    return {v: evaluate_product(qmap.images[v], rep) for v in qmap.target.vertices}


def chain_support(chain: Sequence[QRationalMap], v: str) -> frozenset:
    """Source generators of ``chain[0]`` the final image of ``v`` depends on."""
    needed = {v}
    for qmap in reversed(chain):
        needed = {u for w in needed for u in qmap.support(w)}
    return frozenset(needed)


def evaluate_chain(chain: Sequence[QRationalMap], v: str, rep: Representation) -> np.ndarray:
    """Final image of ``v`` with the matrices of ``rep`` pushed through the chain."""
    wanted: List[set] = [set() for _ in range(len(chain) + 1)]
    wanted[-1] = {v}
    for step in range(len(chain) - 1, -1, -1):
        for w in wanted[step + 1]:
            wanted[step] |= chain[step].support(w)
    matrices = {w: rep.matrices[w] for w in wanted[0]}
    for step, qmap in enumerate(chain):
        level = Representation(qmap.source, rep.order, rep.q, matrices, _inverses(matrices))
        matrices = {w: evaluate_product(qmap.images[w], level) for w in wanted[step + 1]}
    return matrices[v]


def _inverses(matrices: Mapping[str, np.ndarray]) -> Dict[str, np.ndarray]:
    out = {}
    for name, m in matrices.items():
        if np.linalg.cond(m) > settings.CONDITION_CAP:
            raise PoleError(name)
        out[name] = np.linalg.inv(m)
    return out
