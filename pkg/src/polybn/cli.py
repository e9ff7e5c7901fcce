"""Command-line interface: analyze, enumerate, classify, selftest.

Polygon input is whitespace-separated ``x,y`` pairs (``"0,0 5,0 0,5"``) or a
JSON array of pairs; the convex hull is taken.  Polynomial input follows the
grammar in ``polybn.laurent`` (``x^-2*y + 3/2*x*y^2 - 1``; ``**`` also works
for powers).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .brill_noether import gonality_bound_theorem, min_degree_nonneg_rho
from .classification import SCHEMA_VERSION
from .enumeration import default_threads
from .errors import UnsupportedRangeError
from .laurent import EmptyPolynomialError, LaurentSyntaxError, format_poly, newton_polygon, parse
from .lattice import (
    LatticePolygon,
    equivalent,
    interior_lattice_points,
    interior_polygon,
    is_standard_simplex_multiple,
    lattice_points,
    lattice_width,
    parse_polygon,
    simplex,
)

EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_RANGE = 4
EXIT_IO = 5


def _cert_json(cert) -> dict:
    return {"width": cert.width, "direction": None if cert.direction is None else list(cert.direction.as_tuple())}


def _verdict(P: LatticePolygon, g: int, lw: int) -> tuple[bool, str]:
    """(forces a negative-rho rank-1 divisor?, text)."""
    if g == 0:
        return False, "genus 0: no interior points, nothing to exclude"
    threshold = min_degree_nonneg_rho(g, 1)
    if lw < threshold:
        return True, (f"lattice width {lw} < {threshold}: a rank-1 divisor with negative rho exists; "
                      "not Brill-Noether general")
    text = "combinatorially admissible by width"
    inner = interior_polygon(P)
    d = is_standard_simplex_multiple(P)
    if equivalent(inner, simplex(2)):
        text += "; excluded by plane-quintic rule"
    elif g == 10 and lattice_width(inner).width >= 4:
        text += "; excluded by genus-10 Clifford rule"
    elif d is not None and d >= 2 and d - 1 < threshold:
        text += f"; plane curve of degree {d} has gonality {d - 1} < {threshold}, so not Brill-Noether general"
    return False, text


def analyze(P: LatticePolygon, echo: dict) -> dict:
    if not P.is_full:
        raise ValueError(f"Newton polygon is {P.dimension}, a two-dimensional polygon is required")
    interior_pts = interior_lattice_points(P)
    g = len(interior_pts)
    cert = lattice_width(P)
    inner = interior_polygon(P)
    forced, text = _verdict(P, g, cert.width)
    return {
        "schema": SCHEMA_VERSION,
        "input": echo,
        "newton_polygon": P.to_json(),
        "n_lattice_points": len(lattice_points(P)),
        "n_interior_points": g,
        "interior_polygon": inner.to_json(),
        "interior_dimension": inner.dimension,
        "lattice_width": _cert_json(cert),
        "interior_lattice_width": _cert_json(lattice_width(inner)),
        "simplex_d": is_standard_simplex_multiple(P),
        "genus_if_smooth": g,
        "gonality_cap": cert.width,
        "rank1_threshold": min_degree_nonneg_rho(g, 1) if g else None,
        "theorem_bound": gonality_bound_theorem(g) if g >= 3 else None,
        "forces_negative_rho_rank1": forced,
        "verdict": text,
    }


def _pretty(report: dict) -> str:
    lines = []
    for key in ("newton_polygon", "n_lattice_points", "n_interior_points", "interior_polygon",
                "lattice_width", "interior_lattice_width", "simplex_d", "genus_if_smooth",
                "gonality_cap", "rank1_threshold", "theorem_bound", "verdict"):
        val = report[key]
        if key in ("newton_polygon", "interior_polygon"):
            val = " ".join(f"{x},{y}" for x, y in val) or "(empty)"
        elif isinstance(val, dict):
            val = f"{val['width']} along {val['direction']}"
        lines.append(f"{key.replace('_', ' '):>24}: {val}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    try:
        if args.poly is not None:
            f = parse(args.poly)
            P = newton_polygon(f)
            echo = {"poly": args.poly, "canonical": format_poly(f)}
        else:
            P = parse_polygon(args.polygon)
            echo = {"polygon": args.polygon}
    except (LaurentSyntaxError, EmptyPolynomialError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        report = analyze(P, echo)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    sys.stdout.write(_pretty(report) if args.pretty else json.dumps(report, sort_keys=True) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    from .report import enumeration_jsonl

    try:
        text = enumeration_jsonl(
            interior=args.interior, points=args.points, limit=args.limit,
            threads=args.threads, interior_classes_only=args.interior_classes,
        )
    except UnsupportedRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    sys.stdout.write(text)
    return 0


def cmd_classify(args) -> int:
    from .report import build_outputs

    if not 1 <= args.max_genus <= 6:
        print("error: --max-genus must be in 1..6", file=sys.stderr)
        return EXIT_RANGE
    report_text, svg_text = build_outputs(max_genus=args.max_genus, threads=args.threads)
    try:
        os.makedirs(args.out, exist_ok=True)
        report_path = os.path.join(args.out, "report.json")
        svg_path = os.path.join(args.out, "figures.svg")
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(report_text)
        with open(svg_path, "w", encoding="utf-8") as fh:
            fh.write(svg_text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    summary = json.loads(report_text)
    print(json.dumps({"admissible_count": summary["admissible"]["count"],
                      "report": report_path, "figures": svg_path}, sort_keys=True))
    return 0


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    only = None
    if args.only:
        only = {int(x) for x in args.only.split(",")}
    results = run_all(only)
    for r in results:
        print(r.line(), flush=True)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polybn",
        description="Newton polygons, lattice width and Brill-Noether arithmetic.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=(
            "polygon format: \"0,0 5,0 0,5\" or '[[0,0],[5,0],[0,5]]' (hull is taken)\n"
            "polynomial grammar: sum of terms [sign][coeff][*]factors, factor = x|y[^e],\n"
            "  e a signed integer (x^-2), coeff an integer, p/q or decimal; ** works like ^\n"
            "environment: POLYBN_THREADS sets the default for --threads"
        ),
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one Newton polygon")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--poly", help="Laurent polynomial in x, y")
    src.add_argument("--polygon", help="lattice points whose hull is the polygon")
    p.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list polygon classes as JSON lines")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--interior", type=int, metavar="G", help="polygons with G interior points (1..12)")
    which.add_argument("--points", type=int, metavar="N", help="polygons with N lattice points")
    p.add_argument("--interior-classes", action="store_true",
                   help="with --interior, list the distinct interior polygons instead")
    p.add_argument("--limit", type=int, help="print at most this many lines")
    p.add_argument("--threads", type=int, default=None, help="worker processes")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="write report.json and figures.svg")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--max-genus", type=int, default=6, help="largest genus in the admissible list (1..6)")
    p.add_argument("--threads", type=int, default=None, help="worker processes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None) is None and hasattr(args, "threads"):
        args.threads = default_threads()
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
