"""Request parsing, solution reports, and report serialization for the CLI.

A request is a JSON object {"geometry": ..., "lengths": [...], "options":
{...}} with options "tolerance" (root-finder relative tolerance) and
"horocycle_band" (hyperbolic classification band).  A report is a JSON
object with "status" "ok" or "error"; ok reports carry the geometry-tagged
solution payload plus diagnostics (recovery residuals, solver iterations,
cross-check deltas).  Every residual in an emitted ok report has been
checked against its module tolerance; a violation raises rather than
emitting a bad report.

Floats are serialized with 17 significant digits (binary64 round-trip
exact); serialization of a parsed canonical report is byte-identical.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import euclidean, hyperbolic, minkowski, spherical, variational
from .domain import TWO_PI, SideLengths
from .errors import DomainError, InfeasibleError, InvariantViolation

__all__ = [
    "GEOMETRIES",
    "SolveRequest",
    "RequestError",
    "parse_request",
    "cli_solve",
    "cli_classify",
    "cli_verify",
    "cli_render",
    "dumps_report",
]

GEOMETRIES = ("euclidean", "spherical", "hyperbolic", "minkowski")

_CONVENTIONS = {
    "euclidean": "circumcenter at origin, first vertex on +x, counterclockwise",
    "spherical": "circle axis +z, first vertex in the xz-plane, counterclockwise from the axis",
    "hyperbolic:circle": "circle centered on (0,0,1), first vertex in the x1x3-plane",
    "hyperbolic:horocycle": "horocycle x3 - x1 = 1, marking starts at (0,0,1)",
    "hyperbolic:hypercycle": "axis geodesic in the x1x3-plane, vertices at x2 = +sinh(R)",
    "minkowski": "future hyperbola branch (x2 > 0), first vertex at rapidity 0",
}


class RequestError(DomainError):
    """The request is structurally malformed (bad JSON shape, unknown keys)."""


@dataclass(frozen=True)
class SolveRequest:
    geometry: str
    lengths: list[float]
    tolerance: float | None = None
    horocycle_band: float | None = None


def parse_request(
    data,
    *,
    geometry: str | None = None,
    tolerance: float | None = None,
    horocycle_band: float | None = None,
) -> SolveRequest:
    """Validate a decoded request object; CLI flags override request options."""
    if not isinstance(data, dict):
        raise RequestError(f"request must be a JSON object, got {type(data).__name__}")
    unknown = set(data) - {"geometry", "lengths", "options"}
    if unknown:
        raise RequestError(f"unknown request keys: {sorted(unknown)}")

    geo = geometry if geometry is not None else data.get("geometry")
    if geo is None:
        raise RequestError("no geometry: set \"geometry\" in the request or pass --geometry")
    if geo not in GEOMETRIES:
        raise RequestError(f"unknown geometry {geo!r}; expected one of {list(GEOMETRIES)}")

    lengths = data.get("lengths")
    if not isinstance(lengths, list) or not lengths:
        raise RequestError("\"lengths\" must be a non-empty array of numbers")
    for v in lengths:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise RequestError(f"\"lengths\" must contain only numbers, got {v!r}")

    options = data.get("options", {})
    if not isinstance(options, dict):
        raise RequestError("\"options\" must be an object")
    unknown = set(options) - {"tolerance", "horocycle_band"}
    if unknown:
        raise RequestError(f"unknown option keys: {sorted(unknown)}")

    tol = tolerance if tolerance is not None else options.get("tolerance")
    band = horocycle_band if horocycle_band is not None else options.get("horocycle_band")
    for name, v in (("tolerance", tol), ("horocycle_band", band)):
        if v is not None:
            if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
                raise RequestError(f"option {name!r} must be a finite number")
            if name == "tolerance" and v <= 0:
                raise RequestError("option 'tolerance' must be positive")
            if name == "horocycle_band" and v < 0:
                raise RequestError("option 'horocycle_band' must be non-negative")

    return SolveRequest(
        geometry=geo,
        lengths=[float(v) for v in lengths],
        tolerance=None if tol is None else float(tol),
        horocycle_band=None if band is None else float(band),
    )


# ---------------------------------------------------------------------------
# solution payloads and diagnostics


def _vec(x) -> list[float]:
    return [float(v) for v in x]


def _mat(x) -> list[list[float]]:
    return [[float(v) for v in row] for row in x]


def _side_vectors(vertices: np.ndarray) -> np.ndarray:
    return np.roll(vertices, -1, axis=0) - vertices


def _max_rel_err(recovered: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.abs(recovered - expected) / expected))


def _angle_sum_err(angles) -> float:
    return abs(math.fsum(angles.values.tolist()) - TWO_PI)


def _relation_spread(ratios: np.ndarray) -> float:
    return float((ratios.max() - ratios.min()) / ratios.mean())


def _enforce(residuals: dict, tolerances: dict) -> None:
    for key, tol in tolerances.items():
        if residuals[key] > tol:
            raise InvariantViolation(
                f"solution residual {key} = {residuals[key]:.3e} exceeds {tol:g}"
            )


def _euclidean_report_body(lengths: SideLengths, sol: euclidean.EuclideanSolution):
    l = lengths.values
    sides = np.linalg.norm(_side_vectors(sol.vertices), axis=1)
    residuals = {
        "side_recovery_max_rel_error": _max_rel_err(sides, l),
        "angle_sum_abs_error": _angle_sum_err(sol.angles),
        "curve_residency_max_rel_error": float(
            np.max(np.abs(np.linalg.norm(sol.vertices, axis=1) - sol.radius)) / sol.radius
        ),
    }
    _enforce(residuals, {
        "side_recovery_max_rel_error": 1e-9,
        "angle_sum_abs_error": 1e-11,
        "curve_residency_max_rel_error": 1e-10,
    })
    ratios = l / (2.0 * np.sin(0.5 * sol.angles.values))
    payload = {
        "radius": float(sol.radius),
        "center_inside": bool(sol.center_inside),
        "angles": _vec(sol.angles.values),
        "vertices": _mat(sol.vertices),
    }
    diagnostics = {
        "residuals": residuals,
        "solver_iterations": int(sol.iterations),
        "cross_check": {"radius_relation_rel_spread": _relation_spread(ratios)},
    }
    return payload, diagnostics, _CONVENTIONS["euclidean"]


def _spherical_report_body(lengths: SideLengths, sol: spherical.SphericalSolution):
    l = lengths.values
    chords = np.linalg.norm(_side_vectors(sol.vertices), axis=1)
    sides = 2.0 * np.arcsin(np.minimum(1.0, chords / 2.0))
    axis_dots = sol.vertices[:, 2]
    residuals = {
        "side_recovery_max_rel_error": _max_rel_err(sides, l),
        "angle_sum_abs_error": _angle_sum_err(sol.angles),
        "curve_residency_max_abs_error": float(
            max(
                np.max(np.abs(np.linalg.norm(sol.vertices, axis=1) - 1.0)),
                axis_dots.max() - axis_dots.min(),
            )
        ),
    }
    _enforce(residuals, {
        "side_recovery_max_rel_error": 1e-10,
        "angle_sum_abs_error": 1e-11,
        "curve_residency_max_abs_error": 1e-12,
    })
    ratios = 2.0 * np.sin(0.5 * l) / (2.0 * np.sin(0.5 * sol.angles.values))
    payload = {
        "chordal_radius": float(sol.chordal_radius),
        "circumradius": float(sol.circumradius),
        "angles": _vec(sol.angles.values),
        "vertices": _mat(sol.vertices),
    }
    diagnostics = {
        "residuals": residuals,
        "solver_iterations": int(sol.iterations),
        "cross_check": {"radius_relation_rel_spread": _relation_spread(ratios)},
    }
    return payload, diagnostics, _CONVENTIONS["spherical"]


def _hyp_dot(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def _hyperbolic_report_body(lengths: SideLengths, sol: hyperbolic.HyperbolicSolution):
    l = lengths.values
    v = sol.vertices
    d = _side_vectors(v)
    chords = np.sqrt(_hyp_dot(d, d))
    sides = 2.0 * np.arcsinh(chords / 2.0)
    kind = sol.curve_class.kind
    if kind == hyperbolic.CIRCLE:
        functional = v[:, 2]
    elif kind == hyperbolic.HOROCYCLE:
        functional = v[:, 2] - v[:, 0]  # == 1 on the horocycle
    else:
        functional = v[:, 1]
    residuals = {
        "side_recovery_max_rel_error": _max_rel_err(sides, l),
        "curve_residency_max_abs_error": float(np.max(np.abs(_hyp_dot(v, v) + 1.0))),
        "curve_functional_max_spread": float(functional.max() - functional.min()),
    }
    # a banded horocycle answers the nearest exact-horocycle instance: its
    # dominant side may differ from the request by the classification margin
    side_tol = 1e-9
    if kind == hyperbolic.HOROCYCLE:
        chord_dom = 2.0 * math.sinh(0.5 * float(l[sol.curve_class.index]))
        side_tol = max(side_tol, 1.5 * abs(sol.curve_class.margin) / chord_dom)
    _enforce(residuals, {
        "side_recovery_max_rel_error": side_tol,
        "curve_residency_max_abs_error": 1e-10,
        "curve_functional_max_spread": 1e-10,
    })

    payload = {
        "class": {
            "kind": kind,
            "dominant": int(sol.curve_class.index),
            "margin": float(sol.curve_class.margin),
        },
        "vertices": _mat(v),
    }
    cross = {}
    if kind == hyperbolic.CIRCLE:
        payload["circumradius"] = float(sol.circumradius)
        payload["angles"] = _vec(sol.angles.values)
        ratios = (2.0 * np.sinh(0.5 * l)) / (2.0 * np.sin(0.5 * sol.angles.values))
        cross["radius_relation_rel_spread"] = _relation_spread(ratios)
        residuals["angle_sum_abs_error"] = _angle_sum_err(sol.angles)
        _enforce(residuals, {"angle_sum_abs_error": 1e-11})
    elif kind == hyperbolic.HOROCYCLE:
        payload["offsets"] = _vec(sol.offsets)
        cross["chord_margin_rel"] = float(
            sol.curve_class.margin / math.fsum((2.0 * np.sinh(0.5 * l)).tolist())
        )
    else:
        payload["axis_distance"] = float(sol.axis_distance)
        payload["foot_distances"] = _vec(sol.foot_distances.values)
        a = sol.foot_distances.values
        dom = sol.curve_class.index
        residuals["foot_additivity_abs_error"] = float(
            abs(a[dom] - math.fsum(np.delete(a, dom).tolist()))
        )
        _enforce(residuals, {"foot_additivity_abs_error": 1e-10})
        ratios = (2.0 * np.sinh(0.5 * l)) / (2.0 * np.sinh(0.5 * a))
        cross["radius_relation_rel_spread"] = _relation_spread(ratios)
    diagnostics = {
        "residuals": residuals,
        "solver_iterations": int(sol.iterations),
        "cross_check": cross,
    }
    return payload, diagnostics, _CONVENTIONS[f"hyperbolic:{kind}"]


def _minkowski_report_body(lengths: SideLengths, sol: minkowski.MinkowskiSolution):
    l = lengths.values
    v = sol.vertices
    d = _side_vectors(v)
    sides = np.sqrt(d[:, 0] ** 2 - d[:, 1] ** 2)
    rsq = sol.radius * sol.radius
    a = sol.foot_params.values
    residuals = {
        "side_recovery_max_rel_error": _max_rel_err(sides, l),
        "curve_residency_max_rel_error": float(
            np.max(np.abs(v[:, 0] ** 2 - v[:, 1] ** 2 + rsq)) / rsq
        ),
        "foot_additivity_abs_error": float(
            abs(a[sol.dominant] - math.fsum(np.delete(a, sol.dominant).tolist()))
        ),
    }
    _enforce(residuals, {
        "side_recovery_max_rel_error": 1e-9,
        "curve_residency_max_rel_error": 1e-10,
        "foot_additivity_abs_error": 1e-10,
    })
    ratios = l / (2.0 * np.sinh(0.5 * a))
    payload = {
        "radius": float(sol.radius),
        "dominant": int(sol.dominant),
        "foot_params": _vec(a),
        "vertices": _mat(v),
    }
    diagnostics = {
        "residuals": residuals,
        "solver_iterations": int(sol.iterations),
        "cross_check": {"radius_relation_rel_spread": _relation_spread(ratios)},
    }
    return payload, diagnostics, _CONVENTIONS["minkowski"]


def _solve(request: SolveRequest):
    lengths = SideLengths(request.lengths)
    tol = request.tolerance
    if request.geometry == "euclidean":
        sol = euclidean.solve_euclidean(lengths, rel_tol=tol or 1e-14)
        return lengths, sol, _euclidean_report_body(lengths, sol)
    if request.geometry == "spherical":
        sol = spherical.solve_spherical(lengths, rel_tol=tol or 1e-14)
        return lengths, sol, _spherical_report_body(lengths, sol)
    if request.geometry == "hyperbolic":
        band = request.horocycle_band
        if band is None:
            band = hyperbolic.DEFAULT_HOROCYCLE_BAND
        sol = hyperbolic.solve_hyperbolic(lengths, horocycle_band=band, rel_tol=tol or 1e-12)
        return lengths, sol, _hyperbolic_report_body(lengths, sol)
    sol = minkowski.solve_minkowski(lengths, rel_tol=tol or 1e-12)
    return lengths, sol, _minkowski_report_body(lengths, sol)


def cli_solve(request: SolveRequest) -> dict:
    """Solve the request and assemble the ok-report."""
    _, _, (payload, diagnostics, convention) = _solve(request)
    return {
        "status": "ok",
        "geometry": request.geometry,
        "convention": convention,
        "solution": payload,
        "diagnostics": diagnostics,
    }


def cli_classify(request: SolveRequest) -> dict:
    """Classify the inscribing curve of a hyperbolic instance."""
    if request.geometry != "hyperbolic":
        raise RequestError("classify applies to geometry \"hyperbolic\" only")
    band = request.horocycle_band
    if band is None:
        band = hyperbolic.DEFAULT_HOROCYCLE_BAND
    cls = hyperbolic.classify(SideLengths(request.lengths), horocycle_band=band)
    return {
        "status": "ok",
        "geometry": "hyperbolic",
        "class": {
            "kind": cls.kind,
            "dominant": int(cls.index),
            "margin": float(cls.margin),
            "band": float(band),
        },
    }


def cli_verify(request: SolveRequest) -> dict:
    """Solve, re-derive the sides from the vertices, and cross-check.

    For Euclidean requests both solution paths are run: the radius
    root-finder and the variational simplex maximizer; their radius delta is
    part of the report.
    """
    lengths, sol, (payload, diagnostics, convention) = _solve(request)
    checks = dict(diagnostics["residuals"])
    checks.update(diagnostics["cross_check"])
    if request.geometry == "euclidean":
        alpha = variational.maximize_on_simplex(lengths)
        r_var = variational.check_critical_point(lengths, alpha)
        if not isinstance(r_var, float):
            raise InvariantViolation(
                f"variational maximizer is not a critical point (spread {r_var.spread:.3e})"
            )
        checks["rootfind_radius"] = float(sol.radius)
        checks["variational_radius"] = float(r_var)
        checks["dual_path_radius_rel_delta"] = abs(r_var - sol.radius) / sol.radius
    return {
        "status": "ok",
        "geometry": request.geometry,
        "convention": convention,
        "checks": checks,
        "solution": payload,
    }


def cli_render(report: dict) -> str:
    """Render an ok-report (or solve a request first) to an SVG document."""
    from . import svg

    if "status" in report:
        if report.get("status") != "ok":
            err = report.get("error", {})
            raise InfeasibleError(
                f"refusing to render an error report: {err.get('message', 'unknown error')}"
            )
        return svg.render_report(report)
    request = parse_request(report)
    return svg.render_report(cli_solve(request))


# ---------------------------------------------------------------------------
# canonical JSON


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise InvariantViolation(f"non-finite value {x!r} in report")
    if x == 0.0:
        x = 0.0  # avoid "-0", which would reparse as an integer
    return format(x, ".17g")


def _emit(obj, out: list, indent: int, level: int) -> None:
    pad = " " * (indent * level)
    inner = " " * (indent * (level + 1))
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (k, v) in enumerate(obj.items()):
            if not isinstance(k, str):
                raise InvariantViolation(f"non-string report key {k!r}")
            out.append(f"{inner}{json.dumps(k)}: ")
            _emit(v, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(obj) else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(inner)
            _emit(v, out, indent, level + 1)
            out.append(",\n" if i + 1 < len(obj) else "\n")
        out.append(pad + "]")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif obj is None:
        out.append("null")
    else:
        raise InvariantViolation(f"unserializable report value of type {type(obj).__name__}")


def dumps_report(report: dict, *, indent: int = 2) -> str:
    """Serialize a report with 17-significant-digit floats, newline-terminated."""
    out: list[str] = []
    _emit(report, out, indent, 0)
    out.append("\n")
    return "".join(out)
