# src/pgl3/services/checks.py
"""Named relation checks behind the ``verify`` command."""
import logging
import random
from typing import List, Optional, Sequence

from pgl3.algebra.positivity import Positivity, random_positive_point
from pgl3.algebra.ratfunc import RatFunc, format_expr
from pgl3.cluster.mutation import compose, mutate_x
from pgl3.cluster.poisson import check_poisson_preserved
from pgl3.core.config import settings
from pgl3.geometry.polygons import (
    coords_of_polygon_pair,
    dual_polygon_pair,
    is_convex_inscribed,
    polygon_pair_from_coords,
)
from pgl3.monodromy.graph import build_graph
from pgl3.monodromy.positivity import hyperbolicity_check
from pgl3.monodromy.traces import trace_of_power
from pgl3.quantum.verify import (
    verify_commuting_flips,
    verify_flip_formulas,
    verify_flip_square,
    verify_quantum_pentagon,
)
from pgl3.schemas.report_schema import CheckReport
from pgl3.surface.epsilon import epsilon_of_triangulation
from pgl3.surface.flips import flip_closed_form, flip_via_mutations, pentagon_map
from pgl3.surface.marked_points import interior_names
from pgl3.surface.sigma import sigma_involution, sigma_map
from pgl3.surface.triangulation import Triangulation, polygon_triangulation, surface_triangulation


logger = logging.getLogger(__name__)

TORUS_LOOPS = ("ab", "ac", "bc")


def check_flip_involution(tri: Triangulation) -> CheckReport:
    """Closed form against mutations, and flip followed by the back flip."""
    for e in tri.internal_edges():
        name = tri.edge_name(e)
        new_tri, forward = flip_closed_form(tri, e)
        _, via = flip_via_mutations(tri, e)
        if not forward.equals(via):
            return CheckReport(check="flip-involution", passed=False, witness={"edge": name, "mismatch": "mutations"})
        _, backward = flip_closed_form(new_tri, e, back=True)
        if not compose(forward, backward).is_identity():
            return CheckReport(check="flip-involution", passed=False, witness={"edge": name, "mismatch": "square"})
    return CheckReport(check="flip-involution", passed=True, details={"edges": len(tri.internal_edges())})


def check_classical_pentagon(passes: int = 2) -> CheckReport:
    tri, cmap = pentagon_map(passes)
    interior = interior_names(tri)
    fixture = {}
    for v in interior:
        image = cmap.images[v]
        names = image.variables
        fixture[v] = names[0] if len(names) == 1 and image == RatFunc.var(names[0]) else format_expr(image)
    passed = all(fixture[v] == v for v in interior)
    return CheckReport(
        check="pentagon",
        passed=passed,
        details={"passes": passes, "permutation": fixture},
        witness=None if passed else {v: w for v, w in fixture.items() if w != v},
    )


QUANTUM_CHECKS = {
    "flip-formulas": verify_flip_formulas,
    "flip-square": verify_flip_square,
    "commuting-flips": verify_commuting_flips,
    "pentagon": verify_quantum_pentagon,
}


def check_quantum_relations(
    orders: Sequence[int], trials: Optional[int] = None, relations: Optional[Sequence[str]] = None
) -> List[CheckReport]:
    reports = []
    for n in orders:
        for relation in relations or QUANTUM_CHECKS:
            verify = QUANTUM_CHECKS[relation]
            report = verify(n, trials)
            reports.append(
                CheckReport(
                    check=f"quantum-{report.relation}",
                    passed=report.passed,
                    details=report.to_dict(),
                    witness=None if report.passed else {"max_residual": report.max_residual},
                )
            )
    return reports


def check_poisson(tri: Triangulation, c: Optional[int] = None) -> CheckReport:
    """Every single mutation and every flip preserves the bracket."""
    c = settings.POISSON_CONSTANT if c is None else c
    seed = epsilon_of_triangulation(tri)
    for k in interior_names(tri):
        if not check_poisson_preserved(mutate_x(seed, k), c):
            return CheckReport(check="poisson", passed=False, witness={"mutation": k})
    for e in tri.internal_edges():
        if not check_poisson_preserved(flip_closed_form(tri, e)[1], c):
            return CheckReport(check="poisson", passed=False, witness={"flip": tri.edge_name(e)})
    return CheckReport(check="poisson", passed=True, details={"constant": c})


def check_trace_positivity(powers: Sequence[int] = (1, 2, 3), samples: int = 0, rng: Optional[random.Random] = None) -> CheckReport:
    """Traces of powers of loops on the once-punctured torus."""
    graph = build_graph(surface_triangulation(1, 1))
    rng = rng or random.Random(settings.RNG_SEED)
    results = {}
    for word in TORUS_LOOPS:
        loop = graph.loop_from_edges(word)
        for n in powers:
            result = trace_of_power(graph, loop, n)
            results[f"{word}^{n}"] = result.certificate.status.value
            if result.certificate.status is not Positivity.POSITIVE_LAURENT or not result.integral:
                return CheckReport(check="positivity", passed=False, details=results, witness=result.to_dict())
        if samples:
            report = hyperbolicity_check(graph, loop, samples, rng)
            if not report.passed:
                return CheckReport(check="positivity", passed=False, details=results, witness=report.to_dict())
    return CheckReport(check="positivity", passed=True, details=results)


def check_sigma(rng: random.Random, trials: int = 10, n: int = 4) -> CheckReport:
    """Sigma is an involution and matches projective duality of polygon pairs."""
    tri = polygon_triangulation(n)
    sigma = sigma_map(tri)
    if not compose(sigma, sigma).is_identity():
        return CheckReport(check="sigma", passed=False, witness={"mismatch": "square"})
    interior = interior_names(tri)
    for _ in range(trials):
        point = random_positive_point(interior, rng)
        dual = coords_of_polygon_pair(dual_polygon_pair(polygon_pair_from_coords(point, tri)), tri)
        expected = sigma_involution(tri, point)
        if any(dual[k] != expected[k] for k in interior):
            return CheckReport(
                check="sigma", passed=False, witness={k: str(v) for k, v in point.items()}
            )
    return CheckReport(check="sigma", passed=True, details={"trials": trials, "n": n})


def check_roundtrip(rng: random.Random, trials: int = 50, sizes: Sequence[int] = (3, 4, 5, 6)) -> CheckReport:
    """Positive coordinates to a convex inscribed pair and back."""
    for n in sizes:
        tri = polygon_triangulation(n)
        interior = interior_names(tri)
        for _ in range(trials):
            point = random_positive_point(interior, rng)
            pair = polygon_pair_from_coords(point, tri)
            back = coords_of_polygon_pair(pair, tri)
            if any(back[k] != point[k] for k in interior) or not is_convex_inscribed(pair):
                return CheckReport(
                    check="roundtrip",
                    passed=False,
                    witness={"n": n, "point": {k: str(v) for k, v in point.items()}},
                )
    return CheckReport(check="roundtrip", passed=True, details={"trials": trials, "sizes": list(sizes)})
