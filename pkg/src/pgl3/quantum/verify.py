# src/pgl3/quantum/verify.py
"""Numeric checks of quantum flip relations in clock-shift representations.

Each generator is checked on the sub-seed its images depend on, so the
representation stays small even when the whole seed has large rank.
"""
import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from pgl3.core.config import settings
from pgl3.core.exceptions import CheckFailedError, PoleError, SeedMismatchError
from pgl3.quantum.flips import quantum_flip, quantum_flip_chain, quantum_flip_sequence
from pgl3.quantum.maps import QRationalMap
from pgl3.quantum.representation import (
    chain_support,
    clock_shift_representation,
    evaluate_chain,
)
from pgl3.services.workers import run_parallel
from pgl3.surface.flips import pentagon_sequence
from pgl3.surface.marked_points import interior_names
from pgl3.surface.triangulation import Triangulation, polygon_triangulation


logger = logging.getLogger(__name__)

MAX_RESAMPLES = 10
TWIST_RANGE = (0.5, 2.0)


@dataclass(frozen=True)
class ResidualReport:
    relation: str
    order: int
    trials: int
    max_residual: float
    resamples: int
    vertices: Tuple[str, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tolerance

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "N": self.order,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "resamples": self.resamples,
            "checked": list(self.vertices),
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def _residual(
    left: Sequence[QRationalMap],
    right: Sequence[QRationalMap],
    v: str,
    order: int,
    rng: random.Random,
) -> Tuple[float, int]:
    seed = left[0].source
    support = chain_support(left, v) | (chain_support(right, v) if right else {v})
    sub = seed.restrict(support)
    for attempt in range(MAX_RESAMPLES + 1):
        twists = {name: rng.uniform(*TWIST_RANGE) for name in sub.vertices}
        rep = clock_shift_representation(sub, order, twists=twists)
        try:
            lhs = evaluate_chain(left, v, rep)
            rhs = evaluate_chain(right, v, rep) if right else rep.matrices[v]
        except PoleError as exc:
            logger.info("singular factor %s at a sampled twist, resampling", exc.factor)
            continue
        scale = max(1.0, float(np.linalg.norm(rhs, 2)))
        return float(np.linalg.norm(lhs - rhs, 2)) / scale, attempt
    raise CheckFailedError(f"no regular twist found for {v}")


def _trial(job: Tuple) -> Tuple[float, int]:
    left, right, vertices, order, trial_seed = job
    rng = random.Random(trial_seed)
    worst, resamples = 0.0, 0
    for v in vertices:
        residual, retries = _residual(left, right, v, order, rng)
        worst = max(worst, residual)
        resamples += retries
    return worst, resamples


def compare_chains(
    relation: str,
    left: Sequence[QRationalMap],
    right: Sequence[QRationalMap],
    vertices: Sequence[str],
    order: int,
    trials: Optional[int] = None,
    rng_seed: Optional[int] = None,
    jobs: Optional[int] = None,
) -> ResidualReport:
    """Largest relative operator-norm gap between two chains over random twists.

    An empty ``right`` stands for the identity on the source generators.
    """
    if right and not left[-1].target.same_as(right[-1].target):
        raise SeedMismatchError("the two sides end at different seeds")
    trials = settings.QUANTUM_TRIALS if trials is None else trials
    base = settings.RNG_SEED if rng_seed is None else rng_seed
    jobs_list = [(list(left), list(right), tuple(vertices), order, base + t) for t in range(trials)]
    results = run_parallel(_trial, jobs_list, jobs)
    worst = max((r for r, _ in results), default=0.0)
    resamples = sum(k for _, k in results)
    logger.info("%s at N=%d: max residual %.3g over %d trials", relation, order, worst, trials)
    return ResidualReport(relation, order, trials, worst, resamples, tuple(vertices), settings.TOLERANCE)


def verify_flip_formulas(order: int, trials: Optional[int] = None, back: bool = False) -> ResidualReport:
    """Closed-form quantum flip against the composite of four quantum mutations."""
    tri = polygon_triangulation(4)
    e = tri.edge_between(0, 2)
    _, closed = quantum_flip(tri, e, back=back)
    _, chain = quantum_flip_chain(tri, e, back=back)
    return compare_chains("flip-formulas", [closed], chain, closed.target.vertices, order, trials)


def verify_flip_square(order: int, trials: Optional[int] = None) -> ResidualReport:
    tri = polygon_triangulation(4)
    e = tri.edge_between(0, 2)
    flipped, forward = quantum_flip(tri, e)
    _, backward = quantum_flip(flipped, e, back=True)
    if not backward.target.same_as(forward.source):
        raise CheckFailedError("flipping back does not restore the seed")
    return compare_chains("flip-square", [forward, backward], [], forward.source.vertices, order, trials)


def verify_commuting_flips(order: int, trials: Optional[int] = None) -> ResidualReport:
    """Flips at two diagonals of a hexagon with no common triangle, in both orders."""
    tri = polygon_triangulation(6, [(0, 2), (0, 3), (3, 5)])
    _, one = quantum_flip_sequence(tri, [(0, 2), (3, 5)])
    _, other = quantum_flip_sequence(tri, [(3, 5), (0, 2)])
    return compare_chains("commuting-flips", one, other, one[-1].target.vertices, order, trials)


def verify_quantum_pentagon(
    order: int, trials: Optional[int] = None, passes: int = 2, tri: Optional[Triangulation] = None
) -> ResidualReport:
    """The pentagon sequence, repeated ``passes`` times, against the identity on interior generators."""
    tri = tri or polygon_triangulation(5)
    _, chain = quantum_flip_sequence(tri, pentagon_sequence(tri) * passes)
    if not chain[-1].target.same_as(chain[0].source):
        raise CheckFailedError("the pentagon sequence does not return to the starting seed")
    return compare_chains("pentagon", chain, [], interior_names(tri), order, trials)


def verify_all(orders: Optional[Sequence[int]] = None, trials: Optional[int] = None) -> List[ResidualReport]:
    reports: List[ResidualReport] = []
    for n in orders or settings.QUANTUM_ORDERS:
        reports.append(verify_flip_formulas(n, trials))
        reports.append(verify_flip_square(n, trials))
        reports.append(verify_commuting_flips(n, trials))
        reports.append(verify_quantum_pentagon(n, trials))
    return reports
