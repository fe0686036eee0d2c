"""Euclidean cyclic polygons: existence check, circumradius root-finding,
angle recovery, planar vertex construction, and area.

A cyclic polygon with sides l_1..l_n inscribed in a circle of radius R has
central angles a_k with sum(a_k) = 2*pi and l_k = 2 R sin(a_k/2).  The
solver root-finds in R on a single monotone equation chosen by a case split
on the position of the circumcenter:

* center inside (or on) the polygon: sum_k arcsin(l_k / 2R) = pi,
* center cut off by the longest side m (its angle exceeds pi):
  sum_{k != m} arcsin(l_k / 2R) = arcsin(l_m / 2R).

The split is decided at the smallest admissible radius R0 = l_max/2 by
comparing sum_{k != m} arcsin(l_k / l_m) with pi/2.  Each branch is solved
by bracketed bisection plus a Newton polish.  A polygon exists iff every
side is strictly shorter than the sum of the others, and it is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .domain import TWO_PI, CentralAngles, SideLengths
from .errors import DomainError, NearDegenerateError, NoPolygonError
from .rootfind import bisect_newton

__all__ = [
    "PolygonIneqStatus",
    "EuclideanSolution",
    "check_polygon_inequalities",
    "solve_euclidean",
    "vertices_on_circle",
    "polygon_area",
]

#: R may not exceed this multiple of the longest side (beyond it the input
#: is degenerate to working precision)
_MAX_RADIUS_FACTOR = 1e15

STRICT = "strict"
EQUALITY = "equality"
VIOLATED = "violated"


@dataclass(frozen=True)
class PolygonIneqStatus:
    """Outcome of the polygon inequalities l_k < sum_{i != k} l_i.

    At most one side can offend (positive lengths), so a single index
    suffices.  ``margin`` is l_k - sum_{i != k} l_i at the longest side:
    negative for strict feasibility, zero for a flat polygon, positive when
    impossible.
    """

    kind: str  # one of STRICT, EQUALITY, VIOLATED
    index: int | None
    margin: float

    @property
    def is_strict(self) -> bool:
        return self.kind == STRICT


@dataclass(frozen=True, eq=False)
class EuclideanSolution:
    """Unique cyclic polygon for the given sides.

    Vertices are listed counterclockwise with the circumcenter at the
    origin and the first vertex on the positive horizontal axis.
    ``center_inside`` is False iff the longest side's central angle
    exceeds pi (the circumcenter falls outside the polygon).
    """

    radius: float
    angles: CentralAngles
    vertices: np.ndarray  # (n, 2)
    center_inside: bool
    iterations: int = field(default=0, compare=False)


def check_polygon_inequalities(lengths) -> PolygonIneqStatus:
    """Classify the sides as strictly feasible, flat, or impossible."""
    lengths = SideLengths.coerce(lengths)
    l = lengths.values
    m = int(np.argmax(l))
    margin = l[m] - math.fsum(np.delete(l, m).tolist())
    if margin < 0.0:
        return PolygonIneqStatus(STRICT, None, margin)
    if margin == 0.0:
        return PolygonIneqStatus(EQUALITY, m, margin)
    return PolygonIneqStatus(VIOLATED, m, margin)


def _require_strict(lengths: SideLengths) -> PolygonIneqStatus:
    status = check_polygon_inequalities(lengths)
    if status.kind == EQUALITY:
        raise NoPolygonError(
            f"side {status.index} equals the sum of the others: the polygon "
            "degenerates to a flat (doubly traversed) segment",
            index=status.index,
            equality=True,
        )
    if status.kind == VIOLATED:
        raise NoPolygonError(
            f"side {status.index} exceeds the sum of the others by {status.margin:g}: "
            "no polygon exists",
            index=status.index,
        )
    return status


def solve_euclidean(lengths, *, rel_tol: float = 1e-14) -> EuclideanSolution:
    """Construct the unique Euclidean cyclic polygon with the given sides.

    Raises NoPolygonError when the polygon inequalities fail, and
    NearDegenerateError when they hold by so little that the circumradius
    overflows 1e15 times the longest side.
    """
    lengths = SideLengths.coerce(lengths)
    _require_strict(lengths)
    l = lengths.values
    n = lengths.n
    m = int(np.argmax(l))
    lm = float(l[m])
    others = np.delete(l, m)
    r0 = 0.5 * lm

    # branch selection at the smallest admissible radius
    h0 = math.fsum(np.arcsin(np.minimum(1.0, others / lm)).tolist())
    center_inside = h0 >= 0.5 * math.pi

    if center_inside:

        def f(radius: float) -> float:
            return math.fsum(
                np.arcsin(np.minimum(1.0, l / (2.0 * radius))).tolist()
            ) - math.pi

        def dfdx(radius: float) -> float:
            s = l / (2.0 * radius)
            with np.errstate(divide="ignore"):
                d = s / np.sqrt(np.maximum(0.0, 1.0 - s * s))
            return -math.fsum((d / radius).tolist())

    else:

        def f(radius: float) -> float:
            return math.fsum(
                np.arcsin(others / (2.0 * radius)).tolist()
            ) - math.asin(min(1.0, lm / (2.0 * radius)))

        def dfdx(radius: float) -> float:
            s = others / (2.0 * radius)
            d = math.fsum((s / np.sqrt(1.0 - s * s) / radius).tolist())
            sm = lm / (2.0 * radius)
            return -d + sm / math.sqrt(max(0.0, 1.0 - sm * sm)) / radius

    # bracket: f(r0) >= 0 > f(inf) on the inside branch, f(r0) < 0 < f(inf)
    # on the outside branch; grow the upper end until the sign flips
    f0 = f(r0)
    if f0 == 0.0:
        radius = r0
        iterations = 0
    else:
        hi = 2.0 * r0
        sign0 = f0 > 0.0
        while (f(hi) > 0.0) == sign0:
            hi *= 2.0
            if hi > _MAX_RADIUS_FACTOR * lm:
                raise NearDegenerateError(
                    "circumradius exceeds 1e15 times the longest side; the input "
                    "is degenerate to working precision",
                    index=m,
                )
        res = bisect_newton(f, r0, hi, dfdx=dfdx, rel_tol=rel_tol)
        radius = res.root
        iterations = res.iterations

    alpha = 2.0 * np.arcsin(np.minimum(1.0, l / (2.0 * radius)))
    if not center_inside:
        alpha[m] = TWO_PI - alpha[m]
    # distribute the residual angle defect uniformly instead of dumping it
    # all on the closing side
    alpha *= TWO_PI / math.fsum(alpha.tolist())
    angles = CentralAngles(alpha)

    return EuclideanSolution(
        radius=float(radius),
        angles=angles,
        vertices=vertices_on_circle(radius, angles),
        center_inside=center_inside,
        iterations=iterations,
    )


def vertices_on_circle(radius: float, angles) -> np.ndarray:
    """Place vertices on the circle of the given radius centered at the origin.

    Vertex j sits at polar angle sum(angles[:j]); the first vertex is on the
    positive horizontal axis and the order is counterclockwise, so side j
    joins vertex j to vertex j+1 and subtends angles[j].
    """
    radius = float(radius)
    if not (math.isfinite(radius) and radius > 0.0):
        raise DomainError(f"radius must be positive and finite, got {radius!r}")
    angles = CentralAngles.coerce(angles)
    # The polar angles are accumulated in double-double precision and the
    # trig values corrected to first order; plain prefix sums let rounding
    # leak into the short sides of very eccentric polygons.
    out = np.empty((angles.n, 2))
    hi = lo = 0.0
    for j, a in enumerate(angles.values):
        c, s = math.cos(hi), math.sin(hi)
        out[j, 0] = radius * (c - lo * s)
        out[j, 1] = radius * (s + lo * c)
        t = hi + a  # two-sum: exact error of hi + a goes into lo
        b = t - hi
        lo += (hi - (t - b)) + (a - b)
        hi = t + lo  # renormalize the (hi, lo) pair
        lo -= hi - t
    return out


def polygon_area(vertices) -> float:
    """Shoelace area of a simple counterclockwise polygon."""
    v = np.asarray(vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 2:
        raise DomainError("vertices must be an (n, 2) array")
    if v.shape[0] < 3:
        raise DomainError(f"a polygon needs at least 3 vertices, got {v.shape[0]}")
    x, y = v[:, 0], v[:, 1]
    xr, yr = np.roll(x, -1), np.roll(y, -1)
    return 0.5 * math.fsum((x * yr - xr * y).tolist())
