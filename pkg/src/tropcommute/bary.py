"""Barycentric picture of the four-extremal commuting cones.

Off the equal diagonal every scaled extremal shares one zero coordinate
(``b11`` when ``a11 > a22``, ``b22`` after rescaling when ``a11 < a22``).
Dropping it and exponentiating the other three entries puts each ray at a
point of a triangle whose corners are ``b12``, ``b21`` and the remaining
diagonal entry.  The three cevians through beta1/beta4, beta2 and beta3 are
concurrent; :func:`concurrency_check` measures how exactly.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Sequence

from tropcommute.commute import CaseTag, ConeBasis
from tropcommute.matrix import TropVector
from tropcommute.semiring import BOTTOM, DEFAULT_TOL

SQRT3_2 = math.sqrt(3.0) / 2.0
TRIANGLE = ((0.0, 0.0), (1.0, 0.0), (0.5, SQRT3_2))

Point = tuple[float, float]


class UnsupportedCaseError(ValueError):
    """The projection is only defined when ``a11 != a22``."""


class ProjectionDegenerateError(ValueError):
    pass


class AmbiguousIntersectionError(ValueError):
    """Collinear overlapping segments have no unique intersection."""


@dataclass(frozen=True)
class BaryPoint:
    phi: tuple[float, float, float]
    label: str = ""

    def __post_init__(self):
        if any(p < 0 for p in self.phi) or abs(sum(self.phi) - 1.0) > 1e-12:
            raise ValueError(f"invalid barycentric coordinates {self.phi}")


def _from_weights(w: Sequence[float]) -> tuple[float, float, float]:
    s = sum(w)
    phi = [x / s for x in w]
    # push the rounding residue into the largest weight so the sum is 1
    k = max(range(3), key=phi.__getitem__)
    phi[k] = 1.0 - sum(p for i, p in enumerate(phi) if i != k)
    return tuple(max(p, 0.0) for p in phi)


def _normalise(logs: Sequence[float | None]) -> tuple[float, float, float]:
    # None stands for exp(bottom) = 0; shift by the max log before exponentiating
    finite = [x for x in logs if x is not None]
    if not finite:
        raise ProjectionDegenerateError("point has no finite coordinate")
    top = max(finite)
    return _from_weights([0.0 if x is None else math.exp(x - top) for x in logs])


def vertex_labels(case: CaseTag) -> tuple[str, str, str]:
    if case is CaseTag.ABOVE:
        return ("b12", "b21", "b22")
    if case is CaseTag.BELOW:
        return ("b12", "b21", "b11")
    raise UnsupportedCaseError("projection undefined for equal diagonal")


def project_vector(v: TropVector, case: CaseTag, label: str = "") -> BaryPoint:
    """Barycentric point of one cone vector (dropping the shared coordinate)."""
    if case is CaseTag.ABOVE:
        drop, keep = 0, (1, 2, 3)
    elif case is CaseTag.BELOW:
        drop, keep = 3, (1, 2, 0)
    else:
        raise UnsupportedCaseError("projection undefined for equal diagonal")
    base = v[drop]
    if base is BOTTOM:
        raise ProjectionDegenerateError(f"{v} has bottom in the dropped coordinate")
    logs = [None if v[i] is BOTTOM else v[i] - base for i in keep]
    return BaryPoint(_normalise(logs), label)


def project_extremals(basis: ConeBasis) -> list[BaryPoint]:
    if basis.case is CaseTag.EQUAL:
        raise UnsupportedCaseError("projection undefined for equal diagonal")
    if basis.alpha1 is None or basis.alpha2 is None:
        raise ProjectionDegenerateError("alpha1/alpha2 missing")
    return [
        project_vector(v, basis.case, f"beta{i}") for i, v in enumerate(basis.basis, start=1)
    ]


def to_cartesian(p: BaryPoint, triangle: Sequence[Point] = TRIANGLE) -> Point:
    x = sum(f * v[0] for f, v in zip(p.phi, triangle))
    y = sum(f * v[1] for f, v in zip(p.phi, triangle))
    return (x, y)


def from_cartesian(q: Point, triangle: Sequence[Point] = TRIANGLE, label: str = "") -> BaryPoint:
    (x1, y1), (x2, y2), (x3, y3) = triangle
    det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3)
    l1 = ((y2 - y3) * (q[0] - x3) + (x3 - x2) * (q[1] - y3)) / det
    l2 = ((y3 - y1) * (q[0] - x3) + (x1 - x3) * (q[1] - y3)) / det
    phi = [l1, l2, 1.0 - l1 - l2]
    # clip roundoff just outside the triangle
    phi = [0.0 if -1e-12 < p < 0 else p for p in phi]
    s = sum(phi)
    return BaryPoint(tuple(p / s for p in phi), label)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def segment_intersection(p1: Point, p2: Point, p3: Point, p4: Point,
                         eps: float = 1e-12) -> Point | None:
    """Unique common point of segments ``p1p2`` and ``p3p4``, or ``None``."""
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = p4[0] - p3[0], p4[1] - p3[1]
    qx, qy = p3[0] - p1[0], p3[1] - p1[1]
    denom = _cross(rx, ry, sx, sy)
    scale = max(math.hypot(rx, ry) * math.hypot(sx, sy), 1e-300)
    if abs(denom) <= eps * scale:
        if abs(_cross(qx, qy, rx, ry)) > eps * max(math.hypot(rx, ry), 1e-300):
            return None  # parallel, distinct lines
        rr = rx * rx + ry * ry
        if rr == 0.0:
            return None
        t0 = (qx * rx + qy * ry) / rr
        t1 = t0 + (sx * rx + sy * ry) / rr
        lo, hi = min(t0, t1), max(t0, t1)
        if hi < -eps or lo > 1 + eps:
            return None
        if abs(min(hi, 1.0) - max(lo, 0.0)) <= eps:
            t = max(lo, 0.0)  # touching at a single endpoint
            return (p1[0] + t * rx, p1[1] + t * ry)
        raise AmbiguousIntersectionError("collinear overlapping segments")
    t = _cross(qx, qy, sx, sy) / denom
    u = _cross(qx, qy, rx, ry) / denom
    if -eps <= t <= 1 + eps and -eps <= u <= 1 + eps:
        return (p1[0] + t * rx, p1[1] + t * ry)
    return None


def cevian_intersection(i: int, P: BaryPoint, j: int, Q: BaryPoint) -> BaryPoint:
    """Meeting point of the cevian from vertex ``i`` through ``P`` and from ``j`` through ``Q``.

    A cevian from vertex ``i`` fixes the ratio of the other two coordinates,
    so the intersection is read off from the ratios directly.  Unlike
    intersecting Cartesian lines this stays accurate when both cevians hug
    the same side of the triangle.
    """
    if i == j:
        raise ValueError("cevians from the same vertex")
    k = 3 - i - j
    if P.phi[k] == 0.0 or Q.phi[k] == 0.0:
        raise ProjectionDegenerateError("cevian runs along a side of the triangle")
    w = [0.0, 0.0, 0.0]
    w[i] = Q.phi[i] * P.phi[k]
    w[j] = P.phi[j] * Q.phi[k]
    w[k] = P.phi[k] * Q.phi[k]
    return BaryPoint(_from_weights(w))


@dataclass
class ConcurrencyReport:
    omega: BaryPoint
    omega_xy: Point
    pairwise: dict[str, Point]
    residual: float
    foot_xy: Point
    foot_residual: float
    ratio_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return (self.residual <= self.tol and self.foot_residual <= self.tol
                and self.ratio_residual <= self.tol)


def _dist(p: Point, q: Point) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def concurrency_check(basis: ConeBasis, tol: float = DEFAULT_TOL,
                      triangle: Sequence[Point] = TRIANGLE) -> ConcurrencyReport:
    """Check that the cevians ``beta1 beta4``, ``b21 beta2`` and ``b12 beta3`` meet.

    ``omega`` is where the ``beta2`` and ``beta3`` cevians cross; ``residual``
    is the largest Cartesian distance between the three pairwise crossings.
    The report also carries the foot of the ray from the apex through
    ``omega`` on the opposite side, which must land on ``beta4``, and the
    log-ratio identity ``alpha1 - alpha2 = a12 - a21`` behind that coincidence.
    """
    pts = project_extremals(basis)
    # beta1 sits on the apex, so beta1-beta4 is the cevian from vertex 2
    cevians = {"beta1-beta4": (2, pts[3]), "b21-beta2": (1, pts[1]), "b12-beta3": (0, pts[2])}
    names = list(cevians)
    pairs = {}
    for a in range(3):
        for b in range(a + 1, 3):
            p = cevian_intersection(*cevians[names[a]], *cevians[names[b]])
            pairs[f"{names[a]} x {names[b]}"] = to_cartesian(p, triangle)
    found = list(pairs.values())
    residual = max(_dist(p, q) for p in found for q in found)
    omega = cevian_intersection(1, pts[1], 0, pts[2])
    w1, w2, _ = omega.phi
    foot = BaryPoint((w1 / (w1 + w2), w2 / (w1 + w2), 0.0))
    foot_xy = to_cartesian(foot, triangle)
    a11, a12, a21, a22 = basis.matrix.entries
    return ConcurrencyReport(
        omega=BaryPoint(omega.phi, "omega"),
        omega_xy=to_cartesian(omega, triangle),
        pairwise=pairs,
        residual=residual,
        foot_xy=foot_xy,
        foot_residual=_dist(foot_xy, to_cartesian(pts[3], triangle)),
        ratio_residual=abs((basis.alpha1 - basis.alpha2) - (a12 - a21)),
        tol=tol,
    )


# --- plot data -------------------------------------------------------------

@dataclass
class TrianglePlot:
    """Points to draw inside the reference triangle.

    ``segments`` are solid edges of the projected cone, as index pairs into
    ``points``; ``cevians`` are dotted lines as ``(vertex index, point index)``.
    """

    points: list[BaryPoint] = field(default_factory=list)
    segments: list[tuple[int, int]] = field(default_factory=list)
    cevians: list[tuple[int, int]] = field(default_factory=list)
    omega: BaryPoint | None = None
    vertex_labels: tuple[str, str, str] = ("v1", "v2", "v3")
    title: str = ""

    def __post_init__(self):
        n = len(self.points)
        for i, j in self.segments:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"segment ({i}, {j}) out of range for {n} points")
        for k, j in self.cevians:
            if not (0 <= k < 3 and 0 <= j < n):
                raise IndexError(f"cevian ({k}, {j}) out of range")


def build_plot(basis: ConeBasis, tol: float = DEFAULT_TOL) -> TrianglePlot:
    """Projection of the cone: the four beta points, their cevians and omega.

    The cone projects onto the quadrilateral ``beta1 beta2 omega beta3``
    together with the segment ``omega beta4``.
    """
    points = project_extremals(basis)
    report = concurrency_check(basis, tol)
    return TrianglePlot(
        points=points,
        segments=[(0, 1), (0, 2)],
        cevians=[(1, 1), (0, 2), (2, 3)],
        omega=report.omega,
        vertex_labels=vertex_labels(basis.case),
        title=f"{basis.case.value}",
    )


TSV_HEADER = ("label", "phi1", "phi2", "phi3", "x", "y")


def _g(x: float) -> str:
    s = f"{x:.9g}"
    return "0" if s == "-0" else s


def plot_to_tsv(plot: TrianglePlot, triangle: Sequence[Point] = TRIANGLE) -> str:
    buf = io.StringIO()
    buf.write("\t".join(TSV_HEADER) + "\n")
    for p in plot.points:
        x, y = to_cartesian(p, triangle)
        buf.write("\t".join([p.label, *(_g(f) for f in p.phi), _g(x), _g(y)]) + "\n")
    return buf.getvalue()


def emit_plot(plot: TrianglePlot, fmt: str = "svg") -> bytes:
    """Serialise ``plot`` as ``svg`` (rendered by matplotlib) or ``tsv``."""
    if fmt == "tsv":
        return plot_to_tsv(plot).encode("utf-8")
    if fmt == "svg":
        from tropcommute.plotting import render_svg

        return render_svg(plot)
    raise ValueError(f"unknown plot format {fmt!r}")
