"""Static SVG sheet drawing lattice polygons on a unit grid."""

from __future__ import annotations

from html import escape

from .lattice import LatticePolygon, lattice_points

UNIT = 28
PAD = 18
TITLE_H = 22
COLUMNS = 5


def _panel(P: LatticePolygon, title: str, ox: int, oy: int, w_units: int, h_units: int,
           xmin: int, ymin: int, style: str) -> list[str]:
    def sx(x):
        return ox + PAD + (x - xmin) * UNIT

    def sy(y):
        # flip so y grows upward
        return oy + TITLE_H + PAD + (h_units - (y - ymin)) * UNIT

    out = [f'<g class="panel" data-kind="{style}">']
    out.append(f'<text x="{ox + PAD}" y="{oy + 15}" font-size="12" font-family="monospace">{escape(title)}</text>')
    for x in range(xmin, xmin + w_units + 1):
        for y in range(ymin, ymin + h_units + 1):
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="1.5" fill="#bbb"/>')
    fill = {"admissible": "#cfe8cf", "genus10": "#f4d3a8", "quintic": "#f2c4c4"}.get(style, "#ddd")
    v = P.vertices
    if len(v) >= 3:
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in v)
        out.append(f'<polygon class="shape" points="{pts}" fill="{fill}" stroke="#333" stroke-width="1.5"/>')
    elif len(v) == 2:
        (x0, y0), (x1, y1) = v
        out.append(f'<line class="shape" x1="{sx(x0)}" y1="{sy(y0)}" x2="{sx(x1)}" y2="{sy(y1)}" '
                   f'stroke="#333" stroke-width="2.5"/>')
    for x, y in lattice_points(P):
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3.5" fill="#222"/>')
    out.append("</g>")
    return out


def render_sheet(items: list[tuple[LatticePolygon, str, str]], columns: int = COLUMNS) -> str:
    """Render (polygon, title, style) triples as one SVG document.

    style is one of "admissible", "genus10", "quintic"; it only picks a fill colour.
    """
    boxes = []
    for P, _, _ in items:
        xs = [p[0] for p in P.vertices] or [0]
        ys = [p[1] for p in P.vertices] or [0]
        boxes.append((min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys)))
    cell_w = max([b[2] for b in boxes] + [2]) * UNIT + 2 * PAD
    cell_h = max([b[3] for b in boxes] + [2]) * UNIT + 2 * PAD + TITLE_H
    cell_w = max(cell_w, 150)
    rows = (len(items) + columns - 1) // columns
    width = cell_w * min(columns, max(1, len(items)))
    height = cell_h * max(1, rows)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for k, ((P, title, style), (xmin, ymin, w, h)) in enumerate(zip(items, boxes)):
        ox = (k % columns) * cell_w
        oy = (k // columns) * cell_h
        out.extend(_panel(P, title, ox, oy, max(w, 2), max(h, 2), xmin, ymin, style))
    out.append("</svg>")
    return "\n".join(out) + "\n"
