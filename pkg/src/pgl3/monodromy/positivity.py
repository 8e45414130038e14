# src/pgl3/monodromy/positivity.py
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Mapping, Optional, Tuple

from sympy import Poly, discriminant, sturm, symbols

from pgl3.algebra.positivity import (
    Certificate,
    Positivity,
    is_positive_laurent,
    random_positive_point,
)
from pgl3.algebra.ratfunc import format_expr
from pgl3.core.exceptions import InvalidInputError
from pgl3.monodromy.graph import LoopWord, MonodromyGraph
from pgl3.monodromy.matrices import Matrix3


logger = logging.getLogger(__name__)


class TPStatus(str, Enum):
    PASSED = "PASSED"
    FAILED = "FAILED"
    INDETERMINATE = "INDETERMINATE"


class TriangularHint(str, Enum):
    NONE = "none"
    UPPER = "upper"
    LOWER = "lower"


@dataclass(frozen=True)
class MinorCertificate:
    rows: Tuple[int, ...]
    cols: Tuple[int, ...]
    certificate: Certificate

    def to_dict(self) -> dict:
        data = self.certificate.to_dict()
        data["minor"] = [list(self.rows), list(self.cols)]
        return data


@dataclass(frozen=True)
class TPCertificate:
    status: TPStatus
    sign: int = 1
    minors: Tuple[MinorCertificate, ...] = ()
    witness: Optional[dict] = None
    rotation: Optional[int] = None

    def to_dict(self) -> dict:
        data = {
            "status": self.status.value,
            "sign": self.sign,
            "minors": [m.to_dict() for m in self.minors],
        }
        if self.witness is not None:
            data["witness"] = self.witness
        if self.rotation is not None:
            data["rotation"] = self.rotation
        return data


def _certify_sign(m: Matrix3, sign: int, hint: TriangularHint) -> TPCertificate:
    results: List[MinorCertificate] = []
    status = TPStatus.PASSED
    for (rows, cols), minor in m.minors().items():
        value = minor if len(rows) % 2 == 0 or sign > 0 else -minor
        if value.is_zero():
            if hint is not TriangularHint.NONE:
                continue
            return TPCertificate(
                TPStatus.FAILED, sign, tuple(results), {"minor": [list(rows), list(cols)], "value": "0"}
            )
        cert = is_positive_laurent(value)
        results.append(MinorCertificate(rows, cols, cert))
        if cert.status is Positivity.NEGATIVE_WITNESS:
            return TPCertificate(
                TPStatus.FAILED,
                sign,
                tuple(results),
                {"minor": [list(rows), list(cols)], "value": format_expr(value), **cert.to_dict()},
            )
        if not cert.status.is_positive:
            status = TPStatus.INDETERMINATE
    return TPCertificate(status, sign, tuple(results))


def certify_total_positivity(m: Matrix3, triangular_hint: str = "none") -> TPCertificate:
    """Positivity of every minor of ``m`` or ``-m``.

    In a triangular mode only minors that do not vanish identically count.
    """
    hint = TriangularHint(triangular_hint)
    if hint is TriangularHint.UPPER and not m.is_upper_triangular():
        raise InvalidInputError("matrix is not upper triangular")
    if hint is TriangularHint.LOWER and not m.is_lower_triangular():
        raise InvalidInputError("matrix is not lower triangular")
    first = _certify_sign(m, 1, hint)
    if first.status is TPStatus.PASSED:
        return first
    second = _certify_sign(m, -1, hint)
    if second.status is TPStatus.PASSED:
        return second
    if TPStatus.INDETERMINATE in (first.status, second.status):
        logger.warning("total positivity could not be decided")
        return first if first.status is TPStatus.INDETERMINATE else second
    return first


def certify_loop(graph: MonodromyGraph, loop: LoopWord) -> TPCertificate:
    """Boundary loops in triangular mode, other loops over their cyclic rotations."""
    if loop.is_boundary():
        m = graph.monodromy(loop)
        hint = "upper" if m.is_upper_triangular() else "lower" if m.is_lower_triangular() else "none"
        return certify_total_positivity(m, hint)
    last: Optional[TPCertificate] = None
    for k, rotated in enumerate(loop.rotations()):
        cert = certify_total_positivity(graph.monodromy(rotated))
        if cert.status is TPStatus.PASSED:
            return TPCertificate(cert.status, cert.sign, cert.minors, rotation=k)
        last = cert
    return TPCertificate(TPStatus.INDETERMINATE, minors=last.minors if last else ())


def characteristic_polynomial(m: Matrix3) -> Poly:
    lam = symbols("lam")
    return m.to_sympy().charpoly(lam)


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def real_root_count(poly: Poly) -> int:
    """Distinct real roots by a Sturm sequence evaluated at both infinities."""
    seq = sturm(poly)
    at_plus = [p.LC() for p in seq]
    at_minus = [p.LC() * (-1) ** p.degree() for p in seq]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def check_regular_hyperbolic(m: Matrix3, point: Optional[Mapping[str, object]] = None) -> bool:
    """Three distinct real eigenvalues after specialization at a positive point."""
    if point is not None:
        if any(v <= 0 for v in point.values()):
            raise InvalidInputError("specialization point must be positive")
        m = m.specialize(point)
    poly = characteristic_polynomial(m)
    if discriminant(poly) <= 0:
        return False
    return real_root_count(poly) == 3


@dataclass
class HyperbolicityReport:
    loop: list
    points: int = 0
    failures: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"loop": self.loop, "points": self.points, "failures": self.failures, "passed": self.passed}


def hyperbolicity_check(
    graph: MonodromyGraph, loop: LoopWord, samples: int, rng: random.Random
) -> HyperbolicityReport:
    m = graph.monodromy(loop)
    names = sorted({v for i in range(3) for j in range(3) for v in m[i, j].variables})
    report = HyperbolicityReport(loop.to_list())
    for _ in range(samples):
        point = random_positive_point(names, rng, bound=9)
        report.points += 1
        if not check_regular_hyperbolic(m, point):
            report.failures.append({k: str(v) for k, v in point.items()})
    logger.info("hyperbolicity: %d points, %d failures", report.points, len(report.failures))
    return report
