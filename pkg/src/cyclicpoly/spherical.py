"""Spherical cyclic polygons on the unit sphere, by chordal reduction.

Joining the vertices of a spherical cyclic polygon with straight segments
in the ambient 3-space yields a Euclidean cyclic polygon with chord lengths
lbar = 2 sin(l/2) and the same central angles.  A spherical instance is
feasible iff the polygon inequalities hold strictly and the perimeter stays
strictly below 2*pi (at 2*pi the polygon degenerates to a great circle);
for feasible input the chordal circumradius is guaranteed to be < 1, so the
planar solution lifts back to the sphere at height sqrt(1 - Rbar^2) along
the circle axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .domain import TWO_PI, CentralAngles, SideLengths
from .errors import DomainError, InvariantViolation, NoPolygonError, PerimeterError
from .euclidean import PolygonIneqStatus, check_polygon_inequalities, solve_euclidean

__all__ = [
    "SphericalSolution",
    "SphericalFeasibility",
    "chord_from_arc",
    "check_spherical_feasibility",
    "solve_spherical",
]

#: reject perimeters within this absolute tolerance of 2*pi
_PERIMETER_TOL = 1e-12


@dataclass(frozen=True)
class SphericalFeasibility:
    """Outcome of the spherical existence conditions.

    ``reason`` is None when feasible, else "perimeter" (sides sum to >= 2*pi)
    or "polygon_inequality" with the offending 0-based ``index``.
    """

    feasible: bool
    reason: str | None
    index: int | None
    perimeter: float
    polygon: PolygonIneqStatus | None

    def __bool__(self) -> bool:
        return self.feasible


@dataclass(frozen=True, eq=False)
class SphericalSolution:
    """Unique spherical cyclic polygon for the given geodesic side lengths.

    ``chordal_radius`` is the circumradius Rbar < 1 of the chordal polygon;
    ``circumradius`` is the geodesic radius arcsin(Rbar).  Vertices are unit
    vectors on the circle of axis (0, 0, 1) at height sqrt(1 - Rbar^2), the
    first one in the plane of the first and third basis vectors, ordered
    counterclockwise seen from the axis.
    """

    chordal_radius: float
    circumradius: float
    angles: CentralAngles
    vertices: np.ndarray  # (n, 3) unit vectors
    iterations: int = field(default=0, compare=False)


def chord_from_arc(ell: float) -> float:
    """Chord length 2 sin(l/2) of a unit-sphere arc of length l in (0, 2*pi)."""
    ell = float(ell)
    if not (0.0 < ell < TWO_PI) or not math.isfinite(ell):
        raise DomainError(f"arc length must lie in (0, 2*pi), got {ell!r}")
    return 2.0 * math.sin(0.5 * ell)


def check_spherical_feasibility(lengths) -> SphericalFeasibility:
    """Check the perimeter bound, then the polygon inequalities."""
    lengths = SideLengths.coerce(lengths)
    perimeter = math.fsum(lengths.values.tolist())
    if perimeter >= TWO_PI - _PERIMETER_TOL:
        return SphericalFeasibility(False, "perimeter", None, perimeter, None)
    status = check_polygon_inequalities(lengths)
    if not status.is_strict:
        return SphericalFeasibility(False, "polygon_inequality", status.index, perimeter, status)
    return SphericalFeasibility(True, None, None, perimeter, status)


def solve_spherical(lengths, *, rel_tol: float = 1e-14) -> SphericalSolution:
    """Construct the unique spherical cyclic polygon with the given sides."""
    lengths = SideLengths.coerce(lengths)
    feas = check_spherical_feasibility(lengths)
    if not feas:
        if feas.reason == "perimeter":
            raise PerimeterError(
                f"perimeter {feas.perimeter:g} is not strictly below 2*pi: the "
                "polygon degenerates to a great circle"
            )
        raise NoPolygonError(
            f"side {feas.index} is at least the sum of the others: no spherical "
            "polygon exists",
            index=feas.index,
            equality=feas.polygon.kind == "equality",
        )

    chords = np.array([chord_from_arc(l) for l in lengths.values])
    planar = solve_euclidean(chords, rel_tol=rel_tol)
    rbar = planar.radius
    if rbar >= 1.0:
        # impossible for feasible input; means the solver itself is broken
        raise InvariantViolation(
            f"chordal circumradius {rbar!r} >= 1 for feasible spherical input"
        )
    height = math.sqrt(1.0 - rbar * rbar)
    vertices = np.column_stack(
        (planar.vertices, np.full(lengths.n, height))
    )
    return SphericalSolution(
        chordal_radius=rbar,
        circumradius=math.asin(rbar),
        angles=planar.angles,
        vertices=vertices,
        iterations=planar.iterations,
    )
