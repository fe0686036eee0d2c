"""Cyclic polygons in flat 1+1 spacetime, inscribed in a hyperbola branch.

R^{1,1} carries <x,y> = x1 y1 - x2 y2; a spacelike segment has length
sqrt(<d,d>).  A polygon with spacelike sides l_1..l_n inscribed in one
branch of <x,x> = -R^2 exists iff exactly one side strictly exceeds the sum
of the others (the reverse polygon inequality), and is then unique up to
the isometries of the plane (boosts, translations, reflections); this
module reports the canonical representative on the future branch (x2 > 0)
with the first vertex at rapidity 0.

The radius solves the same defect function Phi as the hyperbolic hypercycle
case, with the side lengths themselves playing the role of chords (the
ambient plane is already flat), over the full interval (0, inf): Phi tends
to -inf at 0 and is eventually positive.  Rapidity increments
a_k = 2 arsinh(l_k / 2R) then place the vertices (R sinh t, R cosh t); with
the dominant side last, a_n = sum of the others.

The variational functional phi_ell built from Clh2 has the solved polygon
as its constrained critical point but is neither concave nor convex, so it
is exposed for diagnostics only; no optimization over it is attempted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .domain import SideLengths
from .errors import DimensionMismatchError, DomainError, InvariantViolation, ReverseInequalityError
from .hyperbolic import FootDistances, phi, _solve_phi_root
from .specfun import clh2

__all__ = [
    "MinkowskiFeasibility",
    "MinkowskiSolution",
    "check_minkowski_feasibility",
    "solve_minkowski",
    "phi_ell",
]


@dataclass(frozen=True)
class MinkowskiFeasibility:
    """Outcome of the reverse polygon inequality l_k > sum_{i != k} l_i.

    ``margin`` is the signed excess at the longest side; feasible iff it is
    strictly positive (exactly one side can dominate).
    """

    feasible: bool
    dominant: int
    margin: float

    def __bool__(self) -> bool:
        return self.feasible


@dataclass(frozen=True, eq=False)
class MinkowskiSolution:
    """Unique hyperbola-inscribed polygon for the given spacelike sides.

    ``foot_params`` are the rapidity increments a_k in caller side order;
    ``dominant`` is the index of the dominant side.  Vertices lie on the
    future branch x2 > 0 of x1^2 - x2^2 = -radius^2.
    """

    radius: float
    foot_params: FootDistances
    dominant: int
    vertices: np.ndarray  # (n, 2)
    iterations: int = field(default=0, compare=False)


def check_minkowski_feasibility(lengths) -> MinkowskiFeasibility:
    """Check that exactly one side strictly exceeds the sum of the others."""
    lengths = SideLengths.coerce(lengths)
    l = lengths.values
    dom = int(np.argmax(l))
    margin = float(l[dom]) - math.fsum(np.delete(l, dom).tolist())
    return MinkowskiFeasibility(feasible=margin > 0.0, dominant=dom, margin=margin)


def solve_minkowski(lengths, *, rel_tol: float = 1e-12) -> MinkowskiSolution:
    """Construct the unique spacetime cyclic polygon with the given sides."""
    lengths = SideLengths.coerce(lengths)
    feas = check_minkowski_feasibility(lengths)
    if not feas:
        raise ReverseInequalityError(
            f"side {feas.dominant} does not strictly exceed the sum of the others "
            f"(margin {feas.margin:g}): no hyperbola-inscribed polygon exists",
            index=feas.dominant,
        )
    l = lengths.values
    n = lengths.n
    dom = feas.dominant
    order = [(dom + 1 + j) % n for j in range(n)]
    rot = l[order]

    # bracket in (0, inf): Phi ~ (n-2) log x - const near 0, so shrink the
    # lower end until it is negative, then grow the upper end
    lo = 0.5 * float(l[dom])
    for _ in range(2000):
        if phi(lo, rot) < 0.0:
            break
        lo *= 0.5
    else:
        raise InvariantViolation("could not find a negative lower bracket for phi")
    res = _solve_phi_root(rot, lo, rel_tol)
    radius = res.root

    a_rot = 2.0 * np.arcsinh(rot / (2.0 * radius))
    marks = a_rot[: n - 1].tolist()
    t = np.array([math.fsum(marks[:j]) for j in range(n)])
    vertices = np.empty((n, 2))
    for j, tj in enumerate(t):
        vertices[order[j]] = (radius * math.sinh(tj), radius * math.cosh(tj))
    foot = np.empty(n)
    foot[order] = a_rot
    return MinkowskiSolution(
        radius=radius,
        foot_params=FootDistances(foot),
        dominant=dom,
        vertices=vertices,
        iterations=res.iterations,
    )


def phi_ell(lengths, a) -> float:
    """Diagnostic functional sum_{k<n}(Clh2(a_k) + log(l_k) a_k) - (Clh2(a_n) + log(l_n) a_n).

    Expects the dominant side last.  Its critical points under the
    constraint a_n = sum_{k<n} a_k are exactly the solved polygons
    (-log|2 sinh(a_k/2)| + log(l_k) is then the same constant log R for all
    k), but it is neither concave nor convex, so it is not used as a solver.
    """
    lengths = SideLengths.coerce(lengths)
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 1:
        raise DomainError("a must be a 1-d vector")
    if arr.size != lengths.n:
        raise DimensionMismatchError(
            f"{lengths.n} side lengths vs {arr.size} foot parameters"
        )
    if not np.all(np.isfinite(arr)):
        raise DomainError("foot parameters must be finite")
    logl = np.log(lengths.values)
    terms = [clh2(float(ak)) + logl[k] * float(ak) for k, ak in enumerate(arr)]
    return math.fsum(terms[:-1]) - terms[-1]
