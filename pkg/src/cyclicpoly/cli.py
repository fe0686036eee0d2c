"""Command-line interface.

    cyclicpoly solve    [INPUT] [--geometry G] [--tolerance T] [--horocycle-band B]
    cyclicpoly classify [INPUT] [--geometry hyperbolic] [--horocycle-band B]
    cyclicpoly render   [INPUT] --out FILE [...]
    cyclicpoly verify   [INPUT] [...]

INPUT is a path to a JSON request (or '-' / omitted for stdin): an object
{"geometry": ..., "lengths": [...], "options": {...}}, or an array of such
objects for batch processing.  Reports go to stdout as JSON; render writes
the SVG to --out (nothing is written on failure).

Exit codes: 0 success, 1 malformed input, 2 geometric infeasibility.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import polyio
from .errors import (
    ConvergenceError,
    CyclicPolyError,
    DomainError,
    InfeasibleError,
    InvariantViolation,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2


def _error_report(code: str, message: str, side: int | None = None) -> dict:
    err: dict = {"code": code, "message": message}
    if side is not None:
        err["side"] = int(side)
    return {"status": "error", "error": err}


def _run_one(args, data) -> tuple[dict, int, str | None]:
    """Process one decoded request; returns (report, exit_code, svg_text)."""
    try:
        request = polyio.parse_request(
            data,
            geometry=args.geometry,
            tolerance=args.tolerance,
            horocycle_band=args.horocycle_band,
        )
        if args.command == "solve":
            return polyio.cli_solve(request), EXIT_OK, None
        if args.command == "classify":
            return polyio.cli_classify(request), EXIT_OK, None
        if args.command == "verify":
            return polyio.cli_verify(request), EXIT_OK, None
        report = polyio.cli_solve(request)
        svg_text = polyio.cli_render(report)
        summary = {"status": "ok", "geometry": request.geometry, "out": args.out}
        return summary, EXIT_OK, svg_text
    except InfeasibleError as exc:
        return _error_report(exc.code, str(exc), exc.index), EXIT_INFEASIBLE, None
    except DomainError as exc:
        return _error_report("invalid_input", str(exc)), EXIT_INVALID, None
    except (ConvergenceError, InvariantViolation) as exc:
        return _error_report("internal_error", str(exc)), EXIT_INVALID, None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cyclicpoly",
        description="Solve, classify, render, and verify cyclic polygons with "
        "prescribed side lengths in four geometries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("solve", "solve a request and print the solution report"),
        ("classify", "classify the inscribing curve of a hyperbolic instance"),
        ("render", "solve a request and write an SVG figure"),
        ("verify", "solve and cross-check (dual solver paths, side recovery)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-",
                       help="JSON request file, or '-' for stdin (default)")
        p.add_argument("--geometry", choices=polyio.GEOMETRIES,
                       help="override the request's geometry")
        p.add_argument("--tolerance", type=float,
                       help="root-finder relative tolerance override")
        p.add_argument("--horocycle-band", type=float, dest="horocycle_band",
                       help="hyperbolic horocycle classification band (relative)")
        if name == "render":
            p.add_argument("--out", required=True, help="output SVG path")
    args = parser.parse_args(argv)

    try:
        text = _read_input(args.input)
    except OSError as exc:
        sys.stdout.write(polyio.dumps_report(_error_report("io", str(exc))))
        return EXIT_INVALID
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        report = _error_report(
            "parse", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        )
        sys.stdout.write(polyio.dumps_report(report))
        return EXIT_INVALID

    batch = isinstance(data, list)
    requests = data if batch else [data]
    reports: list[dict] = []
    codes: list[int] = []
    rendered: list[str] = []
    for item in requests:
        try:
            report, code, svg_text = _run_one(args, item)
        except CyclicPolyError as exc:  # pragma: no cover - safety net
            report, code, svg_text = _error_report("internal_error", str(exc)), EXIT_INVALID, None
        reports.append(report)
        codes.append(code)
        if svg_text is not None:
            rendered.append(svg_text)

    if args.command == "render" and all(c == EXIT_OK for c in codes):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("".join(rendered))

    out = reports if batch else reports[0]
    sys.stdout.write(polyio.dumps_report(out))
    if any(c == EXIT_INVALID for c in codes):
        return EXIT_INVALID
    if any(c == EXIT_INFEASIBLE for c in codes):
        return EXIT_INFEASIBLE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
