"""Variational route to the Euclidean cyclic polygon.

For sides l the functional

    f_l(a) = sum_k ( Cl2(a_k) + log(l_k) a_k )

is strictly concave on the open simplex D_n = {a > 0, sum a = 2*pi}, and its
critical points are exactly the central-angle vectors of cyclic polygons
with sides l: the gradient condition says -log|2 sin(a_k/2)| + log(l_k) is
the same constant log(R) for every k, i.e. l_k = 2 R sin(a_k/2).

``maximize_on_simplex`` ascends f_l with Newton steps in the reduced
coordinates (a_1..a_{n-1}; the last angle is eliminated by the sum
constraint), a backtracking line search, and a floor that keeps every angle
positive -- the inward derivative at the simplex boundary is +infinity, so
the maximizer of a feasible instance is interior and the ascent cannot
stall at the boundary.  This path is deliberately independent of the
radius root-finder in ``euclidean``; agreement of the two is a library
self-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import TWO_PI, CentralAngles, SideLengths
from .errors import ConvergenceError, DimensionMismatchError, DomainError
from .specfun import _clausen2_vec

__all__ = [
    "f_ell",
    "v_n",
    "grad_f_ell",
    "maximize_on_simplex",
    "check_critical_point",
    "CriticalPointMismatch",
]

#: line-search floor on every angle (radians)
_ANGLE_FLOOR = 1e-14


def _match(lengths: SideLengths, angles: CentralAngles) -> None:
    if lengths.n != angles.n:
        raise DimensionMismatchError(
            f"{lengths.n} side lengths vs {angles.n} central angles"
        )


def f_ell(lengths, alpha) -> float:
    """The concave objective sum_k (Cl2(a_k) + log(l_k) a_k)."""
    lengths = SideLengths.coerce(lengths)
    alpha = CentralAngles.coerce(alpha)
    _match(lengths, alpha)
    a = alpha.values
    terms = _clausen2_vec(a) + np.log(lengths.values) * a
    return math.fsum(terms.tolist())


def v_n(alpha) -> float:
    """sum_k Cl2(a_k): the length-independent part of the objective."""
    alpha = CentralAngles.coerce(alpha)
    return math.fsum(_clausen2_vec(alpha.values).tolist())


def _gradient(logl: np.ndarray, a: np.ndarray) -> np.ndarray:
    return -np.log(2.0 * np.sin(0.5 * a)) + logl


def grad_f_ell(lengths, alpha) -> np.ndarray:
    """Gradient of f_ell; component k is -log|2 sin(a_k/2)| + log(l_k).

    Only defined at interior points: on the simplex boundary the derivative
    of Cl2 is +infinity.
    """
    lengths = SideLengths.coerce(lengths)
    alpha = CentralAngles.coerce(alpha)
    _match(lengths, alpha)
    if not alpha.is_interior:
        raise DomainError(
            "gradient is singular at the simplex boundary (some angle is 0 or 2*pi)"
        )
    return _gradient(np.log(lengths.values), alpha.values)


def _objective(logl: np.ndarray, a: np.ndarray) -> float:
    return math.fsum((_clausen2_vec(a) + logl * a).tolist())


def maximize_on_simplex(
    lengths,
    *,
    grad_spread_tol: float = 1e-10,
    max_iterations: int = 10_000,
) -> CentralAngles:
    """Maximize f_ell over the open simplex of central angles.

    The caller is responsible for the strict polygon inequalities (see
    euclidean.check_polygon_inequalities); for such inputs the maximizer is
    the unique interior critical point, where all gradient components agree
    (the shared value is log of the circumradius).  Convergence is declared
    when the gradient spread max - min drops to grad_spread_tol.
    """
    lengths = SideLengths.coerce(lengths)
    n = lengths.n
    logl = np.log(lengths.values)

    a = np.full(n, TWO_PI / n)
    fa = _objective(logl, a)
    spread = math.inf

    for _ in range(max_iterations):
        g = _gradient(logl, a)
        spread = float(g.max() - g.min())
        if spread <= grad_spread_tol:
            return CentralAngles(a)

        # Newton step in reduced coordinates: eliminating a_n turns the
        # restricted Hessian into diag(h_1..h_{n-1}) + h_n * ones, which is
        # negative definite by strict concavity.
        h = -0.5 / np.tan(0.5 * a)
        gamma = g[:-1] - g[-1]
        H = np.diag(h[:-1]) + h[-1]
        try:
            d = np.linalg.solve(H, -gamma)
        except np.linalg.LinAlgError:
            d = None
        if d is not None:
            v = np.append(d, -d.sum())
            if float(g @ v) <= 0.0:
                d = None
        if d is None:
            v = g - g.mean()  # projected gradient fallback
        slope = float(g @ v)
        if slope <= 0.0:
            break  # numerically stationary

        # cap the step so every angle stays above the floor
        t = 1.0
        falling = v < 0.0
        if np.any(falling):
            t = min(t, 0.99 * float(np.min((a[falling] - _ANGLE_FLOOR) / -v[falling])))
        if t <= 0.0:
            break

        if d is not None and spread < 1e-5:
            # endgame: objective improvements drop below evaluation noise,
            # so skip the line search and let Newton contract the iterate
            a_new = a + t * v
            a_new *= TWO_PI / math.fsum(a_new.tolist())
            if np.all(a_new > 0.0):
                a, fa = a_new, _objective(logl, a_new)
                continue

        improved = False
        for _ in range(60):
            a_new = a + t * v
            a_new *= TWO_PI / math.fsum(a_new.tolist())
            if np.all(a_new > 0.0):
                f_new = _objective(logl, a_new)
                if f_new >= fa + 1e-4 * t * slope:
                    a, fa = a_new, f_new
                    improved = True
                    break
            t *= 0.5
        if not improved:
            break

    g = _gradient(logl, a)
    spread = float(g.max() - g.min())
    if spread <= grad_spread_tol:
        return CentralAngles(a)
    raise ConvergenceError(
        f"simplex ascent did not reach gradient spread {grad_spread_tol:g} "
        f"(best {spread:.3e})",
        best=CentralAngles(a),
        gradient_spread=spread,
    )


@dataclass(frozen=True, eq=False)
class CriticalPointMismatch:
    """Report returned when the per-side radii l_k / (2 sin(a_k/2)) disagree."""

    ratios: np.ndarray
    spread: float  # relative max-min spread of the ratios


def check_critical_point(lengths, alpha, *, rel_tol: float = 1e-9):
    """Verify the circumradius relation at an interior angle vector.

    Returns the common value R of l_k / (2 sin(a_k/2)) when all components
    agree to rel_tol relative, otherwise a CriticalPointMismatch carrying
    the ratios and their spread (a mismatch is an answer, not an error).
    """
    lengths = SideLengths.coerce(lengths)
    alpha = CentralAngles.coerce(alpha)
    _match(lengths, alpha)
    if not alpha.is_interior:
        raise DomainError("critical-point check requires an interior angle vector")
    ratios = lengths.values / (2.0 * np.sin(0.5 * alpha.values))
    mean = float(ratios.mean())
    spread = float((ratios.max() - ratios.min()) / mean)
    if spread <= rel_tol:
        return mean
    return CriticalPointMismatch(ratios=ratios, spread=spread)
