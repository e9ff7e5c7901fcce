"""Serialized outputs of the classification: report.json and figures.svg."""

from __future__ import annotations

import json
from typing import Optional

from .classification import full_report
from .lattice import LatticePolygon
from .svg import render_sheet


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def figure_items(report: dict) -> list[tuple[LatticePolygon, str, str]]:
    items = []
    for v in report["admissible"]["classes"]:
        P = LatticePolygon(tuple(map(tuple, v["vertices"])))
        items.append((P, f"g={v['genus']} lw={v['lw']}", "admissible"))
    wide = report["genus10_exceptional"]
    items.append((LatticePolygon(tuple(map(tuple, wide["vertices"]))),
                  f"g=10 lw={wide['lw']} (Clifford)", "genus10"))
    quintic = report["plane_quintic_interior"]
    items.append((LatticePolygon(tuple(map(tuple, quintic["vertices"]))),
                  "g=6 plane quintic", "quintic"))
    return items


def build_outputs(max_genus: int = 6, threads: Optional[int] = None) -> tuple[str, str]:
    """Return (report.json text, figures.svg text)."""
    report = full_report(max_genus=max_genus, threads=threads)
    return dumps(report), render_sheet(figure_items(report))


def enumeration_jsonl(interior: Optional[int] = None, points: Optional[int] = None,
                      limit: Optional[int] = None, threads: Optional[int] = None,
                      interior_classes_only: bool = False) -> str:
    """JSON-lines text, one polygon class per line, in the enumerators' deterministic order."""
    from .enumeration import enumerate_by_interior_points, enumerate_by_lattice_points, interior_classes

    if (interior is None) == (points is None):
        raise ValueError("give exactly one of interior or points")
    if interior is not None:
        fn = interior_classes if interior_classes_only else enumerate_by_interior_points
        classes = fn(interior, threads)
    else:
        classes = enumerate_by_lattice_points(points)
    if limit is not None:
        classes = classes[:limit]
    return "".join(json.dumps(c.to_json(), sort_keys=True) + "\n" for c in classes)
