"""Hyperbolic cyclic polygons in the hyperboloid model.

Vertices live on H^2 = {x in R^{2,1} : <x,x> = -1, x3 > 0} with
<x,y> = x1 y1 + x2 y2 - x3 y3.  A convex polygon is cyclic when its
vertices lie on a curve of constant nonzero curvature: a circle, a
horocycle, or a hypercycle (constant distance R from a geodesic).  Which
one is decided by the chordal lengths lbar = 2 sinh(l/2): the dominant
chord is <, =, or > the sum of the others, respectively (the geodesic
lengths themselves always satisfy the strict polygon inequalities).

Constructions, one per class:

* circle: the chordal polygon is Euclidean, so the planar solver applies;
  a planar circumradius Rbar lifts to hyperbolic circumradius
  r = arsinh(Rbar), and the vertices sit on the plane x3 = cosh(r).
* horocycle: all horocycles are congruent, so we mark cumulative chord
  lengths along x3 - x1 = 1, parametrized by s -> (s^2/2, s, 1 + s^2/2);
  the parameter difference is both the chordal and the horocycle arc
  length.
* hypercycle: with the dominant side last, Rbar = cosh(R) is the unique
  zero in (1, inf) of

      Phi(x) = arsinh(lbar_n / 2x) - sum_{k<n} arsinh(lbar_k / 2x),

  found by bracketed bisection plus a Newton polish (Phi(1) is half the
  negative length deficit, Phi > 0 for large x, and Phi' > 0 at any zero).
  Foot distances a_k = 2 arsinh(lbar_k / 2 Rbar) then mark the vertex feet
  along the axis geodesic, and vertices are
  (Rbar sinh t, sinh R, Rbar cosh t).

Placement conventions (a choice, fixed for reproducibility): the circle is
centered on (0, 0, 1) with the first vertex in the x1 x3-plane; horocycle
marking starts at (0, 0, 1); the hypercycle axis is the geodesic in the
x1 x3-plane and vertices take x2 = +sinh(R).  When the dominant side is not
last in caller order, marking starts at the vertex that follows it;
vertices are always reported in caller side order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .domain import SideLengths
from .errors import DomainError, HorocycleDriftWarning, InvariantViolation
from .euclidean import _require_strict, solve_euclidean
from .rootfind import RootResult, bisect_newton

__all__ = [
    "CIRCLE",
    "HOROCYCLE",
    "HYPERCYCLE",
    "HypCurveClass",
    "FootDistances",
    "HyperbolicSolution",
    "hyp_chord",
    "classify",
    "phi",
    "phi_prime",
    "solve_hypercycle_radius",
    "solve_hyperbolic",
]

CIRCLE = "circle"
HOROCYCLE = "horocycle"
HYPERCYCLE = "hypercycle"

#: default half-width of the horocycle classification band, relative to the
#: total chord length (the horocycle locus has measure zero; exact inputs
#: land within a few ulps of it)
DEFAULT_HOROCYCLE_BAND = 1e-9

#: a solved Rbar = cosh(R) beyond this is numerically indistinguishable from
#: the horocycle limit
_RBAR_OVERFLOW = 1e12


@dataclass(frozen=True)
class HypCurveClass:
    """Inscribing-curve classification.

    ``index`` is the dominant (longest) side, ``margin`` the signed value
    chord[index] - sum(other chords); its sign against the band width picks
    the tag.
    """

    kind: str  # CIRCLE, HOROCYCLE, or HYPERCYCLE
    index: int
    margin: float


class FootDistances:
    """Distances between consecutive perpendicular feet on the axis geodesic.

    In caller side order; with the dominant side reindexed last, the
    dominant entry equals the sum of the others (its foot segment comprises
    all the others).
    """

    __slots__ = ("values",)

    def __init__(self, a):
        arr = np.asarray(a, dtype=float).copy()
        if arr.ndim != 1:
            raise DomainError("foot distances must be a 1-d vector")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
            raise DomainError("foot distances must be finite and positive")
        arr.setflags(write=False)
        self.values = arr

    def __len__(self) -> int:
        return self.values.size

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __repr__(self) -> str:
        return f"FootDistances({self.values.tolist()!r})"


@dataclass(frozen=True, eq=False)
class HyperbolicSolution:
    """Unique hyperbolic cyclic polygon, with per-class parameters.

    ``vertices`` are rows on the unit hyperboloid (<x,x> = -1, x3 > 0) in
    caller side order.  Exactly one parameter group is populated:
    ``circumradius`` (circle), ``offsets`` (horocycle: cumulative chordal
    marks in marking order, starting at 0), or ``axis_distance`` plus
    ``foot_distances`` (hypercycle).  ``angles`` carries the chordal central
    angles in the circle case.
    """

    curve_class: HypCurveClass
    vertices: np.ndarray  # (n, 3)
    circumradius: float | None = None
    angles: object | None = None
    offsets: np.ndarray | None = None
    axis_distance: float | None = None
    foot_distances: FootDistances | None = None
    iterations: int = field(default=0, compare=False)


def hyp_chord(ell: float) -> float:
    """Chordal length 2 sinh(l/2) of a hyperbolic segment of length l > 0."""
    ell = float(ell)
    if not math.isfinite(ell) or ell <= 0.0:
        raise DomainError(f"hyperbolic length must be positive and finite, got {ell!r}")
    try:
        return 2.0 * math.sinh(0.5 * ell)
    except OverflowError:
        raise DomainError(f"hyperbolic length {ell!r} overflows the chord map") from None


def classify(lengths, *, horocycle_band: float = DEFAULT_HOROCYCLE_BAND) -> HypCurveClass:
    """Decide which curve the cyclic polygon is inscribed in.

    Requires the strict polygon inequalities on the geodesic lengths (raises
    NoPolygonError otherwise).  ``horocycle_band`` widens the horocycle tag
    to |margin| <= band * sum(chords); set it to 0 for a strict trichotomy.
    """
    lengths = SideLengths.coerce(lengths)
    if not (horocycle_band >= 0.0):
        raise DomainError(f"horocycle band must be non-negative, got {horocycle_band!r}")
    _require_strict(lengths)
    chords = np.array([hyp_chord(l) for l in lengths.values])
    dom = int(np.argmax(lengths.values))
    margin = float(chords[dom] - math.fsum(np.delete(chords, dom).tolist()))
    tau = horocycle_band * math.fsum(chords.tolist())
    if margin < -tau:
        kind = CIRCLE
    elif margin > tau:
        kind = HYPERCYCLE
    else:
        kind = HOROCYCLE
    return HypCurveClass(kind=kind, index=dom, margin=margin)


def _as_chords(chords) -> np.ndarray:
    arr = np.asarray(chords, dtype=float)
    if arr.ndim != 1 or arr.size < 3:
        raise DomainError("chords must be a 1-d vector with at least 3 entries")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError("chords must be finite and positive")
    return arr


def phi(x: float, chords) -> float:
    """Defect Phi(x) = arsinh(c_n/2x) - sum_{k<n} arsinh(c_k/2x), dominant last."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be positive and finite, got {x!r}")
    c = _as_chords(chords)
    a = np.arcsinh(c / (2.0 * x)).tolist()
    return a[-1] - math.fsum(a[:-1])


def phi_prime(x: float, chords) -> float:
    """Derivative of phi: (1/x)(-tanh a_n(x) + sum_{k<n} tanh a_k(x)).

    Positive at any zero of phi (tanh is strictly subadditive), which is
    what makes the zero unique.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be positive and finite, got {x!r}")
    c = _as_chords(chords)
    t = np.tanh(np.arcsinh(c / (2.0 * x))).tolist()
    return (math.fsum(t[:-1]) - t[-1]) / x


def _solve_phi_root(chords: np.ndarray, lo: float, rel_tol: float) -> RootResult:
    """Root of phi on (lo, inf), given phi(lo) < 0; the bracket is grown x2."""
    hi = max(2.0 * lo, float(chords.max()))
    for _ in range(400):
        if phi(hi, chords) > 0.0:
            break
        hi *= 2.0
    else:
        raise InvariantViolation(
            "could not bracket the phi root; chords do not dominate"
        )
    return bisect_newton(
        lambda x: phi(x, chords),
        lo,
        hi,
        dfdx=lambda x: phi_prime(x, chords),
        rel_tol=rel_tol,
    )


def solve_hypercycle_radius(chords, *, rel_tol: float = 1e-12) -> float:
    """Unique zero Rbar = cosh(R) of phi in (1, inf); dominant chord last.

    Requires chords of an actual hyperbolic polygon, i.e. the dominant chord
    exceeds the sum of the others while the underlying geodesic lengths
    still satisfy the polygon inequalities (equivalently phi(1) < 0).
    Violations are a caller bug and raise InvariantViolation.
    """
    c = _as_chords(chords)
    margin = float(c[-1]) - math.fsum(c[:-1].tolist())
    if margin <= 0.0:
        raise InvariantViolation(
            "hypercycle condition fails: last chord does not exceed the sum of the others"
        )
    if phi(1.0, c) >= 0.0:
        raise InvariantViolation(
            "phi(1) >= 0: the geodesic lengths behind these chords violate the "
            "polygon inequalities, so no hypercycle polygon exists"
        )
    return _solve_phi_root(c, 1.0, rel_tol).root


def _horocycle_point(s: float) -> tuple[float, float, float]:
    # unit-speed parametrization of the horocycle x3 - x1 = 1
    return (0.5 * s * s, s, 1.0 + 0.5 * s * s)


def _build_horocycle(
    cls: HypCurveClass, order: list[int], rot_chords: np.ndarray, iterations: int = 0
) -> HyperbolicSolution:
    n = rot_chords.size
    marks = rot_chords[: n - 1].tolist()
    offsets = np.array([math.fsum(marks[:j]) for j in range(n)])
    vertices = np.empty((n, 3))
    for j, s in enumerate(offsets):
        vertices[order[j]] = _horocycle_point(s)
    return HyperbolicSolution(
        curve_class=cls,
        vertices=vertices,
        offsets=offsets,
        iterations=iterations,
    )


def solve_hyperbolic(
    lengths,
    *,
    horocycle_band: float = DEFAULT_HOROCYCLE_BAND,
    rel_tol: float = 1e-12,
) -> HyperbolicSolution:
    """Construct the unique hyperbolic cyclic polygon with the given sides.

    Classifies the inscribing curve, then dispatches on the class.  Raises
    NoPolygonError when the polygon inequalities fail.  If a hypercycle
    solve lands beyond Rbar = 1e12 (possible only with a tiny or zero
    classification band), the horocycle construction is returned instead,
    under a HorocycleDriftWarning.
    """
    lengths = SideLengths.coerce(lengths)
    cls = classify(lengths, horocycle_band=horocycle_band)
    n = lengths.n
    dom = cls.index
    order = [(dom + 1 + j) % n for j in range(n)]
    chords = np.array([hyp_chord(l) for l in lengths.values])

    if cls.kind == CIRCLE:
        planar = solve_euclidean(chords, rel_tol=rel_tol)
        rbar = planar.radius
        x3 = math.hypot(1.0, rbar)  # cosh(arsinh(rbar))
        vertices = np.column_stack((planar.vertices, np.full(n, x3)))
        return HyperbolicSolution(
            curve_class=cls,
            vertices=vertices,
            circumradius=math.asinh(rbar),
            angles=planar.angles,
            iterations=planar.iterations,
        )

    rot_chords = chords[order]
    if cls.kind == HOROCYCLE:
        return _build_horocycle(cls, order, rot_chords)

    res = _solve_phi_root(rot_chords, 1.0, rel_tol)
    rbar = res.root
    if rbar > _RBAR_OVERFLOW:
        warnings.warn(
            f"solved hypercycle radius cosh(R) = {rbar:.3e} exceeds {_RBAR_OVERFLOW:g}; "
            "returning the horocycle construction instead",
            HorocycleDriftWarning,
            stacklevel=2,
        )
        fallback = HypCurveClass(HOROCYCLE, dom, cls.margin)
        return _build_horocycle(fallback, order, rot_chords, iterations=res.iterations)

    sinh_r = math.sqrt((rbar - 1.0) * (rbar + 1.0))
    a_rot = 2.0 * np.arcsinh(rot_chords / (2.0 * rbar))
    marks = a_rot[: n - 1].tolist()
    t = np.array([math.fsum(marks[:j]) for j in range(n)])
    vertices = np.empty((n, 3))
    for j, tj in enumerate(t):
        vertices[order[j]] = (rbar * math.sinh(tj), sinh_r, rbar * math.cosh(tj))
    foot = np.empty(n)
    foot[order] = a_rot
    return HyperbolicSolution(
        curve_class=cls,
        vertices=vertices,
        axis_distance=math.acosh(rbar),
        foot_distances=FootDistances(foot),
        iterations=res.iterations,
    )
