"""Exact integer geometry of convex lattice polygons.

Everything here works on Python ints; nothing touches floating point.
Polygons are immutable values: the vertex tuple of a ``LatticePolygon`` is
always the minimal counterclockwise vertex list of its convex hull, starting
at the lexicographically smallest vertex.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DegeneratePolygonError, EmptyPolygonError

Point = tuple[int, int]

EMPTY = "empty"
POINT = "point"
SEGMENT = "segment"
FULL = "full"


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of the triangle o, a, b (positive when counterclockwise)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def bezout(p: int, q: int) -> tuple[int, int]:
    """Return (a, b) with a*p + b*q == gcd(p, q) >= 0."""
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


@dataclass(frozen=True, order=True)
class PrimitiveVector:
    """A primitive integer vector with canonical sign, i.e. a linear form ``(x, y) -> a*x + b*y``."""

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("primitive vector must be nonzero")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"({self.a}, {self.b}) is not primitive")
        if self.a < 0 or (self.a == 0 and self.b < 0):
            raise ValueError(f"({self.a}, {self.b}) does not have canonical sign")

    @classmethod
    def canonical(cls, a: int, b: int) -> "PrimitiveVector":
        """Divide out the gcd and flip the sign into canonical position."""
        g = gcd(a, b)
        if g == 0:
            raise ValueError("primitive vector must be nonzero")
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return cls(a, b)

    def dot(self, p: Point) -> int:
        return self.a * p[0] + self.b * p[1]

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class AffineUnimodularMap:
    """``(x, y) -> (m11*x + m12*y + tx, m21*x + m22*y + ty)`` with determinant +1 or -1."""

    m11: int
    m12: int
    m21: int
    m22: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"determinant {self.det} is not +1 or -1")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @classmethod
    def identity(cls) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, tx: int, ty: int) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1, tx, ty)

    def __call__(self, p: Point) -> Point:
        x, y = p
        return (self.m11 * x + self.m12 * y + self.tx, self.m21 * x + self.m22 * y + self.ty)

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """The map ``p -> self(other(p))``."""
        return AffineUnimodularMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.m11 * other.tx + self.m12 * other.ty + self.tx,
            self.m21 * other.tx + self.m22 * other.ty + self.ty,
        )

    def inverse(self) -> "AffineUnimodularMap":
        d = self.det
        # d is +-1, so dividing by it is multiplying by it
        i11, i12, i21, i22 = self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d
        return AffineUnimodularMap(
            i11, i12, i21, i22,
            -(i11 * self.tx + i12 * self.ty),
            -(i21 * self.tx + i22 * self.ty),
        )


def _hull_vertices(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 1:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return (hull[0],)
    return tuple(hull)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points.

    The constructor accepts any point list (duplicates, interior points and
    arbitrary order are fine) and stores the minimal vertex list, so two
    polygons compare equal exactly when they are the same set.
    """

    vertices: tuple[Point, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", _hull_vertices(self.vertices))

    @property
    def dimension(self) -> str:
        return (EMPTY, POINT, SEGMENT)[len(self.vertices)] if len(self.vertices) < 3 else FULL

    @property
    def is_full(self) -> bool:
        return len(self.vertices) >= 3

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        if len(v) < 2:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def to_json(self) -> list[list[int]]:
        return [[x, y] for x, y in self.vertices]

    def __str__(self) -> str:
        return " ".join(f"{x},{y}" for x, y in self.vertices)


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolygon:
    return LatticePolygon(tuple(tuple(p) for p in points))


def simplex(d: int) -> LatticePolygon:
    """The dilated standard triangle conv{(0,0), (d,0), (0,d)}."""
    if d == 0:
        return LatticePolygon(((0, 0),))
    return LatticePolygon(((0, 0), (d, 0), (0, d)))


# -- point counting ---------------------------------------------------------

def _column_ranges(P: LatticePolygon, strict: bool):
    """Yield (x, ylo, yhi) for each column x meeting P (or its interior if strict)."""
    v = P.vertices
    xs = [p[0] for p in v]
    for x in range(min(xs), max(xs) + 1):
        lo, hi = None, None
        ok = True
        for p, q in P.edges():
            dx, dy = q[0] - p[0], q[1] - p[1]
            num = dy * (x - p[0])
            if dx == 0:
                s = -dy * (x - p[0])
                if s < 0 or (strict and s == 0):
                    ok = False
                    break
                continue
            if dx > 0:
                b = p[1] + (num // dx + 1 if strict else -((-num) // dx))
                lo = b if lo is None else max(lo, b)
            else:
                b = p[1] + (-((-num) // dx) - 1 if strict else num // dx)
                hi = b if hi is None else min(hi, b)
        if ok and lo is not None and hi is not None and lo <= hi:
            yield x, lo, hi


def lattice_points(P: LatticePolygon) -> list[Point]:
    """All lattice points of P including the boundary, sorted lexicographically."""
    v = P.vertices
    if not v:
        return []
    if len(v) == 1:
        return [v[0]]
    if len(v) == 2:
        (x0, y0), (x1, y1) = v
        g = gcd(x1 - x0, y1 - y0)
        sx, sy = (x1 - x0) // g, (y1 - y0) // g
        return sorted((x0 + k * sx, y0 + k * sy) for k in range(g + 1))
    return [(x, y) for x, lo, hi in _column_ranges(P, False) for y in range(lo, hi + 1)]


def interior_lattice_points(P: LatticePolygon) -> list[Point]:
    """Lattice points in the topological interior of P; empty unless P is two-dimensional."""
    if not P.is_full:
        return []
    return [(x, y) for x, lo, hi in _column_ranges(P, True) for y in range(lo, hi + 1)]


def boundary_count(P: LatticePolygon) -> int:
    v = P.vertices
    if len(v) <= 1:
        return len(v)
    if len(v) == 2:
        return gcd(v[1][0] - v[0][0], v[1][1] - v[0][1]) + 1
    return sum(gcd(q[0] - p[0], q[1] - p[1]) for p, q in P.edges())


def area_twice(P: LatticePolygon) -> int:
    """Twice the area (shoelace); 0 for lower-dimensional polygons."""
    v = P.vertices
    if len(v) < 3:
        return 0
    return sum(p[0] * q[1] - q[0] * p[1] for p, q in P.edges())


def point_counts(P: LatticePolygon) -> tuple[int, int]:
    """(number of lattice points, number of interior lattice points) from area and edge gcds."""
    if not P.is_full:
        return boundary_count(P), 0
    a2, b = area_twice(P), boundary_count(P)
    interior = (a2 - b) // 2 + 1
    return interior + b, interior


def pick_area_twice(P: LatticePolygon) -> int:
    """E + 2I - 2 with E and I counted by scanning the lattice."""
    if not P.is_full:
        raise DegeneratePolygonError("Pick's formula needs a two-dimensional polygon")
    n_all = len(lattice_points(P))
    n_int = len(interior_lattice_points(P))
    return (n_all - n_int) + 2 * n_int - 2


def interior_polygon(P: LatticePolygon) -> LatticePolygon:
    return convex_hull(interior_lattice_points(P))


# -- lattice width ----------------------------------------------------------

@dataclass(frozen=True)
class WidthCertificate:
    width: int
    direction: Optional[PrimitiveVector]


def width_along(P: LatticePolygon, u: PrimitiveVector | tuple[int, int]) -> int:
    if not P.vertices:
        raise EmptyPolygonError("width of the empty polygon is undefined")
    a, b = u.as_tuple() if isinstance(u, PrimitiveVector) else u
    vals = [a * x + b * y for x, y in P.vertices]
    return max(vals) - min(vals)


def lattice_width(P: LatticePolygon) -> WidthCertificate:
    """Minimal width over primitive directions, with a witnessing direction.

    The empty polygon gets width -1; points and segments get 0.  For
    two-dimensional P, any direction u with width(u) <= w satisfies
    |u.e1| <= w and |u.e2| <= w for two independent vertex differences
    e1, e2, so only finitely many u need to be tried.  Ties are broken by
    the smallest canonical (a, b).
    """
    v = P.vertices
    if not v:
        return WidthCertificate(-1, None)
    if len(v) == 1:
        return WidthCertificate(0, PrimitiveVector(1, 0))
    if len(v) == 2:
        dx, dy = v[1][0] - v[0][0], v[1][1] - v[0][1]
        return WidthCertificate(0, PrimitiveVector.canonical(-dy, dx))

    v0 = v[0]
    best_det, e1, e2 = 0, None, None
    for i in range(1, len(v)):
        for j in range(i + 1, len(v)):
            d = abs(cross(v0, v[i], v[j]))
            if d > best_det:
                best_det = d
                e1 = (v[i][0] - v0[0], v[i][1] - v0[1])
                e2 = (v[j][0] - v0[0], v[j][1] - v0[1])
    D = e1[0] * e2[1] - e1[1] * e2[0]

    best = min((width_along(P, (1, 0)), 1, 0), (width_along(P, (0, 1)), 0, 1))
    s = 0
    while s <= best[0]:
        t = -best[0]
        while t <= best[0]:
            if s > 0 or t > 0:
                nx = e2[1] * s - e1[1] * t
                ny = -e2[0] * s + e1[0] * t
                if nx % D == 0 and ny % D == 0:
                    a, b = nx // D, ny // D
                    if gcd(a, b) == 1:
                        pv = PrimitiveVector.canonical(a, b)
                        cand = (width_along(P, (a, b)), pv.a, pv.b)
                        if cand < best:
                            best = cand
            t += 1
        s += 1
    return WidthCertificate(best[0], PrimitiveVector(best[1], best[2]))


# -- unimodular maps and normal forms ---------------------------------------

def apply_map(P: LatticePolygon, T: AffineUnimodularMap) -> LatticePolygon:
    return LatticePolygon(tuple(T(p) for p in P.vertices))


def _candidates(P: LatticePolygon):
    """Yield (vertex tuple, map) for every edge-anchored placement of P.

    For each vertex and traversal direction: move the vertex to the origin,
    send the outgoing edge to the positive x-axis with the polygon above it,
    then shear so the last vertex in the traversal has x in [0, height).
    The set of tuples produced is the same for every polygon in a class.
    """
    v = P.vertices
    k = len(v)
    for i in range(k):
        for step in (1, -1):
            w0 = v[i]
            w1 = v[(i + step) % k]
            wl = v[(i - step) % k]
            ex, ey = w1[0] - w0[0], w1[1] - w0[1]
            g = gcd(ex, ey)
            p, q = ex // g, ey // g
            a, b = bezout(p, q)
            r1 = (a, b)
            r2 = (-q, p)
            lx, ly = wl[0] - w0[0], wl[1] - w0[1]
            h = r2[0] * lx + r2[1] * ly
            if h < 0:
                r2 = (q, -p)
                h = -h
            xl = r1[0] * lx + r1[1] * ly
            t = -(xl // h)
            L = (r1[0] + t * r2[0], r1[1] + t * r2[1], r2[0], r2[1])
            out = []
            for j in range(k):
                w = v[(i + step * j) % k]
                dx, dy = w[0] - w0[0], w[1] - w0[1]
                out.append((L[0] * dx + L[1] * dy, L[2] * dx + L[3] * dy))
            yield tuple(out), (L, w0)


def _map_from(L, w0) -> AffineUnimodularMap:
    m11, m12, m21, m22 = L
    return AffineUnimodularMap(
        m11, m12, m21, m22, -(m11 * w0[0] + m12 * w0[1]), -(m21 * w0[0] + m22 * w0[1])
    )


def normal_form_with_map(P: LatticePolygon) -> tuple[LatticePolygon, AffineUnimodularMap]:
    """Canonical representative of P's class and a map T with apply_map(P, T) == representative."""
    v = P.vertices
    if not v:
        return P, AffineUnimodularMap.identity()
    if len(v) == 1:
        T = AffineUnimodularMap.translation(-v[0][0], -v[0][1])
        return LatticePolygon(((0, 0),)), T
    if len(v) == 2:
        ex, ey = v[1][0] - v[0][0], v[1][1] - v[0][1]
        g = gcd(ex, ey)
        p, q = ex // g, ey // g
        a, b = bezout(p, q)
        T = _map_from((a, b, -q, p), v[0])
        return LatticePolygon(((0, 0), (g, 0))), T
    best = min(_candidates(P), key=lambda c: c[0])
    return LatticePolygon(best[0]), _map_from(*best[1])


def normal_form(P: LatticePolygon) -> LatticePolygon:
    v = P.vertices
    if len(v) < 3:
        return normal_form_with_map(P)[0]
    return LatticePolygon(min(c[0] for c in _candidates(P)))


def equivalent(P: LatticePolygon, Q: LatticePolygon) -> bool:
    if len(P.vertices) != len(Q.vertices) or area_twice(P) != area_twice(Q):
        return False
    return normal_form(P) == normal_form(Q)


def is_standard_simplex_multiple(P: LatticePolygon) -> Optional[int]:
    """Return d if P is equivalent to conv{(0,0), (d,0), (0,d)} with d >= 1, else None."""
    v = P.vertices
    if len(v) != 3:
        return None
    lengths = {gcd(q[0] - p[0], q[1] - p[1]) for p, q in P.edges()}
    if len(lengths) != 1:
        return None
    d = lengths.pop()
    return d if area_twice(P) == d * d else None


# -- text formats -----------------------------------------------------------

_PAIR = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_points(text: str) -> list[Point]:
    """Parse either whitespace-separated "x,y" pairs or a JSON array of [x, y] pairs."""
    s = text.strip()
    if s.startswith("["):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON point list: {exc}") from exc
        pts = []
        for item in data:
            if (
                not isinstance(item, list)
                or len(item) != 2
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in item)
            ):
                raise ValueError(f"expected [x, y] integer pair, got {item!r}")
            pts.append((item[0], item[1]))
        return pts
    pts = []
    for tok in s.split():
        m = _PAIR.match(tok)
        if not m:
            raise ValueError(f"expected x,y integer pair, got {tok!r}")
        pts.append((int(m.group(1)), int(m.group(2))))
    return pts


def parse_polygon(text: str) -> LatticePolygon:
    return convex_hull(parse_points(text))
