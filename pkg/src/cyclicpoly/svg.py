"""Deterministic SVG rendering of solution reports.

Output depends only on the report payload: fixed header, fixed styling,
coordinates at 6 decimals, no timestamps or generated ids, so identical
input yields byte-identical SVG.  Vertical axes point up (coordinates are
emitted y-flipped).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

_POLYGON = "#1f5fa8"
_CURVE = "#c0392b"
_FRAME = "#8a8a8a"

_SAMPLES = 257


def _f(v: float) -> str:
    v = float(v)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.6f}"


class _Canvas:
    """Collects shapes and emits one standalone SVG document."""

    def __init__(self):
        self.items: list[str] = []
        self.min_x = self.min_y = math.inf
        self.max_x = self.max_y = -math.inf

    def _touch(self, x: float, y: float) -> None:
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, y)
        self.max_y = max(self.max_y, y)

    def circle(self, cx: float, cy: float, r: float, stroke: str) -> None:
        cy = -cy
        self._touch(cx - r, cy - r)
        self._touch(cx + r, cy + r)
        self.items.append(
            f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="{_f(r)}" stroke="{stroke}"/>'
        )

    def polyline(self, points, stroke: str, close: bool = False) -> None:
        flipped = [(float(x), -float(y)) for x, y in points]
        for x, y in flipped:
            self._touch(x, y)
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in flipped)
        tag = "polygon" if close else "polyline"
        self.items.append(f'<{tag} points="{coords}" stroke="{stroke}"/>')

    def line(self, x1: float, y1: float, x2: float, y2: float, stroke: str) -> None:
        y1, y2 = -y1, -y2
        self._touch(x1, y1)
        self._touch(x2, y2)
        self.items.append(
            f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" stroke="{stroke}"/>'
        )

    def document(self, title: str) -> str:
        span = max(self.max_x - self.min_x, self.max_y - self.min_y)
        pad = 0.08 * span
        x0, y0 = self.min_x - pad, self.min_y - pad
        w = self.max_x - self.min_x + 2 * pad
        h = self.max_y - self.min_y + 2 * pad
        stroke_width = 0.004 * max(w, h)
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" width="480" height="480" '
            f'viewBox="{_f(x0)} {_f(y0)} {_f(w)} {_f(h)}">\n'
            f"<title>{title}</title>\n"
            f'<g fill="none" stroke-width="{_f(stroke_width)}" '
            'stroke-linejoin="round" stroke-linecap="round">\n'
        )
        return head + "\n".join(self.items) + "\n</g>\n</svg>\n"


def _render_euclidean(sol: dict) -> str:
    canvas = _Canvas()
    canvas.circle(0.0, 0.0, sol["radius"], _CURVE)
    canvas.polyline(sol["vertices"], _POLYGON, close=True)
    return canvas.document("cyclic polygon (euclidean)")


def _render_spherical(sol: dict) -> str:
    # orthographic projection along the circle axis (+z)
    canvas = _Canvas()
    canvas.circle(0.0, 0.0, 1.0, _FRAME)
    canvas.circle(0.0, 0.0, sol["chordal_radius"], _CURVE)
    canvas.polyline([(v[0], v[1]) for v in sol["vertices"]], _POLYGON, close=True)
    return canvas.document("cyclic polygon (spherical, orthographic)")


def _disk(point) -> tuple[float, float]:
    # hyperboloid -> Poincare disk
    x1, x2, x3 = point
    return x1 / (1.0 + x3), x2 / (1.0 + x3)


def _render_hyperbolic(sol: dict) -> str:
    canvas = _Canvas()
    canvas.circle(0.0, 0.0, 1.0, _FRAME)
    kind = sol["class"]["kind"]
    if kind == "circle":
        # the hyperbolic circle of radius r about (0,0,1) projects to the
        # disk circle of radius tanh(r/2)
        canvas.circle(0.0, 0.0, math.tanh(0.5 * sol["circumradius"]), _CURVE)
    elif kind == "horocycle":
        s_max = max(sol["offsets"])
        pad = 0.25 * s_max + 0.5
        ss = np.linspace(-pad, s_max + pad, _SAMPLES)
        pts = [_disk((0.5 * s * s, s, 1.0 + 0.5 * s * s)) for s in ss]
        canvas.polyline(pts, _CURVE)
    else:
        r = sol["axis_distance"]
        rbar, sinh_r = math.cosh(r), math.sinh(r)
        t_max = sol["foot_distances"][sol["class"]["dominant"]]
        pad = 0.25 * t_max + 0.5
        ts = np.linspace(-pad, t_max + pad, _SAMPLES)
        pts = [_disk((rbar * math.sinh(t), sinh_r, rbar * math.cosh(t))) for t in ts]
        canvas.polyline(pts, _CURVE)
    canvas.polyline([_disk(v) for v in sol["vertices"]], _POLYGON, close=True)
    return canvas.document("cyclic polygon (hyperbolic, Poincare disk)")


def _render_minkowski(sol: dict) -> str:
    canvas = _Canvas()
    radius = sol["radius"]
    t_max = sol["foot_params"][sol["dominant"]]
    pad = 0.15 * t_max + 0.2
    ts = np.linspace(-pad, t_max + pad, _SAMPLES)
    branch = [(radius * math.sinh(t), radius * math.cosh(t)) for t in ts]
    xs = [p[0] for p in branch]
    ys = [p[1] for p in branch]
    canvas.line(min(xs), 0.0, max(xs), 0.0, _FRAME)
    canvas.line(0.0, 0.0, 0.0, max(ys), _FRAME)
    canvas.polyline(branch, _CURVE)
    canvas.polyline(sol["vertices"], _POLYGON, close=True)
    return canvas.document("cyclic polygon (1+1 spacetime)")


def render_report(report: dict) -> str:
    """Render an ok-report produced by polyio.cli_solve to SVG text."""
    geometry = report.get("geometry")
    sol = report.get("solution")
    if not isinstance(sol, dict):
        raise DomainError("report carries no solution payload")
    if geometry == "euclidean":
        return _render_euclidean(sol)
    if geometry == "spherical":
        return _render_spherical(sol)
    if geometry == "hyperbolic":
        return _render_hyperbolic(sol)
    if geometry == "minkowski":
        return _render_minkowski(sol)
    raise DomainError(f"cannot render geometry {geometry!r}")
