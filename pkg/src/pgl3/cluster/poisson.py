# src/pgl3/cluster/poisson.py
import logging
from fractions import Fraction
from typing import Dict, Mapping, Union

from pgl3.algebra.ratfunc import RatFunc, derivative
from pgl3.cluster.mutation import ClusterMap
from pgl3.cluster.seed import Seed


logger = logging.getLogger(__name__)

Constant = Union[int, Fraction]


def _gradient(seed: Seed, f: RatFunc) -> Dict[str, RatFunc]:
    present = set(f.variables)
    return {v: derivative(f, v) for v in seed.vertices if v in present}


def _bracket_from_gradients(
    seed: Seed, grad_f: Mapping[str, RatFunc], grad_g: Mapping[str, RatFunc], c: Constant
) -> RatFunc:
    total = RatFunc.const(0)
    for i, j, v in seed.arrows:
        # eps_ij = v, eps_ji = -v
        term = None
        if i in grad_f and j in grad_g:
            term = grad_f[i] * grad_g[j]
        if j in grad_f and i in grad_g:
            back = grad_f[j] * grad_g[i]
            term = back * -1 if term is None else term - back
        if term is not None:
            total = total + term * (Fraction(c) * v) * RatFunc.var(i) * RatFunc.var(j)
    return total


def poisson_bracket(seed: Seed, f: RatFunc, g: RatFunc, c: Constant = 1) -> RatFunc:
    """{f, g} = sum c eps_ij X_i X_j (df/dX_i)(dg/dX_j)."""
    return _bracket_from_gradients(seed, _gradient(seed, f), _gradient(seed, g), c)


def check_poisson_preserved(cmap: ClusterMap, c: Constant = 1) -> bool:
    """Compare pulled-back target brackets with source brackets of the images."""
    source, target = cmap.source, cmap.target
    gradients = {v: _gradient(source, cmap.images[v]) for v in target.vertices}
    vertices = target.vertices
    for a, i in enumerate(vertices):
        for j in vertices[a + 1 :]:
            e = target.eps(i, j)
            lhs = cmap.images[i] * cmap.images[j] * (Fraction(c) * e)
            rhs = _bracket_from_gradients(source, gradients[i], gradients[j], c)
            if lhs != rhs:
                logger.info("bracket of %s and %s not preserved", i, j)
                return False
    return True
