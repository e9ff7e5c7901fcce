"""Enumeration of lattice polygons up to affine unimodular equivalence.

Two enumerations are provided:

* by total number of lattice points, grown one point at a time (removing a
  vertex of a polygon with n points leaves one with n - 1, so every class is
  reached from the previous level);
* by number of interior points g.  Polygons whose interior polygon P is
  two-dimensional are exactly the subpolygons of the relaxation P^(-1)
  reachable by deleting vertices one at a time while keeping g interior
  points.  Polygons whose interior is a point or a segment, other than the
  triangle of size 3, lie in a strip of lattice width 2 and are listed
  directly row by row.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd
from typing import Iterable, Optional

from .errors import EmptyPolygonError, ResourceLimitError, UnsupportedRangeError
from .lattice import (
    bezout,
    LatticePolygon,
    convex_hull,
    interior_polygon,
    lattice_points,
    lattice_width,
    normal_form,
    point_counts,
    simplex,
)

MAX_INTERIOR = 12
MAX_POLYGONS = 2_000_000


@dataclass(frozen=True)
class PolygonClass:
    representative: LatticePolygon
    n_points: int
    n_interior: int
    lw: int

    @classmethod
    def of(cls, P: LatticePolygon) -> "PolygonClass":
        rep = normal_form(P)
        n, i = point_counts(rep)
        return cls(rep, n, i, lattice_width(rep).width)

    @property
    def sort_key(self):
        return (self.n_interior, self.n_points, self.lw, self.representative.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": self.representative.to_json(),
            "n_points": self.n_points,
            "n_interior": self.n_interior,
            "lw": self.lw,
        }


def _sorted_classes(polys: Iterable[LatticePolygon]) -> list[PolygonClass]:
    return sorted((PolygonClass.of(P) for P in polys), key=lambda c: c.sort_key)


# -- relaxation -------------------------------------------------------------

def _relaxed_halfplanes(P: LatticePolygon):
    """Halfplanes (a, b, c) meaning a*x + b*y <= c for every edge moved out by one."""
    out = []
    for p, q in P.edges():
        g = gcd(q[0] - p[0], q[1] - p[1])
        ux, uy = (q[0] - p[0]) // g, (q[1] - p[1]) // g
        # outer normal of a counterclockwise edge
        a, b = uy, -ux
        out.append((a, b, a * p[0] + b * p[1] + 1))
    return out


def _halfplane_vertices(planes) -> list[tuple[Fraction, Fraction]]:
    pts = set()
    for i in range(len(planes)):
        a1, b1, c1 = planes[i]
        for j in range(i + 1, len(planes)):
            a2, b2, c2 = planes[j]
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(c1 * b2 - c2 * b1, det)
            y = Fraction(a1 * c2 - a2 * c1, det)
            if all(a * x + b * y <= c for a, b, c in planes):
                pts.add((x, y))
    # drop points lying strictly inside an edge of the region
    pts = sorted(pts)
    keep = []
    for p in pts:
        tight = [k for k, (a, b, c) in enumerate(planes) if a * p[0] + b * p[1] == c]
        dirs = {(planes[k][0], planes[k][1]) for k in tight}
        if len(dirs) >= 2:
            keep.append(p)
    return keep


@dataclass(frozen=True)
class RelaxationResult:
    integral: bool
    relaxed: Optional[LatticePolygon]
    vertices: tuple = ()


def _degenerate_witness(P: LatticePolygon) -> LatticePolygon:
    v = P.vertices
    if len(v) == 1:
        x, y = v[0]
        return LatticePolygon(((x - 1, y - 1), (x + 2, y - 1), (x - 1, y + 2)))
    (x0, y0), (x1, y1) = v
    g = gcd(x1 - x0, y1 - y0)
    ux, uy = (x1 - x0) // g, (y1 - y0) // g
    # w completes u to a lattice basis: det(u, w) = 1
    a, b = bezout(ux, uy)
    wx, wy = -b, a
    return LatticePolygon(
        ((x0 - ux, y0 - uy), (x1 + ux, y1 + uy), (x0 + wx, y0 + wy), (x0 - wx, y0 - wy))
    )


def relaxation(P: LatticePolygon) -> RelaxationResult:
    """Move every edge of P out by lattice distance one.

    For points and segments there is no edge structure to move; a fixed
    witness polygon whose interior polygon is P is returned instead.
    """
    if not P.vertices:
        raise EmptyPolygonError("cannot relax the empty polygon")
    if not P.is_full:
        W = _degenerate_witness(P)
        return RelaxationResult(True, W, tuple(W.vertices))
    verts = tuple(_halfplane_vertices(_relaxed_halfplanes(P)))
    if all(x.denominator == 1 and y.denominator == 1 for x, y in verts):
        return RelaxationResult(True, LatticePolygon(tuple((int(x), int(y)) for x, y in verts)), verts)
    return RelaxationResult(False, None, verts)


def realizable_as_interior(P: LatticePolygon) -> bool:
    """True iff some two-dimensional polygon has interior polygon equal to P."""
    if not P.vertices:
        raise EmptyPolygonError("the empty polygon is not a candidate interior polygon")
    res = relaxation(P)
    return res.integral and interior_polygon(res.relaxed) == P


# -- enumeration by number of lattice points --------------------------------

def _growth_candidates(Q: LatticePolygon, n: int) -> Iterable[LatticePolygon]:
    """Polygons conv(Q + q) with exactly n lattice points, Q having n - 1."""
    v = Q.vertices
    if len(v) == 1:
        yield LatticePolygon((v[0], (v[0][0] + 1, v[0][1])))
        return
    if len(v) == 2:
        # by Pick, an added apex must sit at lattice distance one
        (x0, y0), (x1, y1) = v
        g = gcd(x1 - x0, y1 - y0)
        ux, uy = (x1 - x0) // g, (y1 - y0) // g
        yield LatticePolygon((v[0], (x1 + ux, y1 + uy)))
        yield LatticePolygon((v[0], v[1], (x0 - uy, y0 + ux)))
        return
    # a new point sees each visible edge from lattice distance exactly one,
    # so it lies in the relaxation of Q
    planes = _relaxed_halfplanes(Q)
    box = _halfplane_vertices(planes)
    xs = [p[0] for p in box]
    ys = [p[1] for p in box]
    for x in range(floor(min(xs)), ceil(max(xs)) + 1):
        for y in range(floor(min(ys)), ceil(max(ys)) + 1):
            slack = [c - a * x - b * y for a, b, c in planes]
            if min(slack) < 0 or min(slack) >= 1:
                continue  # outside the relaxation, or inside Q
            P = LatticePolygon(v + ((x, y),))
            if point_counts(P)[0] == n:
                yield P


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[LatticePolygon, ...]:
    if n == 1:
        return (LatticePolygon(((0, 0),)),)
    found = set()
    for Q in _level(n - 1):
        for P in _growth_candidates(Q, n):
            found.add(normal_form(P))
        if len(found) > MAX_POLYGONS:
            raise ResourceLimitError(f"more than {MAX_POLYGONS} classes at level {n}")
    return tuple(sorted(found, key=lambda P: (len(P.vertices), P.vertices)))


def enumerate_by_lattice_points(n: int) -> list[PolygonClass]:
    """All classes of lattice polygons (points and segments included) with exactly n lattice points."""
    if n < 1:
        raise UnsupportedRangeError("number of lattice points must be at least 1")
    return _sorted_classes(_level(n))


# -- enumeration by number of interior points -------------------------------

def _strip_polygons(g: int) -> set[LatticePolygon]:
    """Normal forms of all polygons in -1 <= y <= 1 touching both y = +-1 with g interior points.

    Row y = 1 is [0, b] and row y = -1 is [c, e] with c in {0, 1}, which a
    shear plus translation always achieves.  The middle row can stick out
    past the segment joining the outer rows on either side.
    """
    found = set()
    for c in (0, 1):
        for b in range(0, 2 * g + 3):
            for e in range(c, 2 * g + 3 + c - b):
                lo, hi = Fraction(c, 2), Fraction(b + e, 2)
                lefts = [(lo, None)] + [
                    (Fraction(l), l) for l in range(floor(lo - g - 2), ceil(lo)) if l < lo
                ]
                rights = [(hi, None)] + [
                    (Fraction(r), r) for r in range(floor(hi) + 1, ceil(hi + g + 3)) if r > hi
                ]
                for L, l in lefts:
                    for R, r in rights:
                        if ceil(R) - floor(L) - 1 != g:
                            continue
                        pts = [(0, 1), (b, 1), (c, -1), (e, -1)]
                        if l is not None:
                            pts.append((l, 0))
                        if r is not None:
                            pts.append((r, 0))
                        P = LatticePolygon(tuple(pts))
                        if point_counts(P)[1] != g:
                            raise AssertionError(f"strip bookkeeping failed for {P}")
                        found.add(normal_form(P))
    return found


def _seeds(g: int) -> list[tuple]:
    """Independent work units: each is ('closure', polygon) or ('fixed', polygons)."""
    jobs: list[tuple] = [("fixed", tuple(sorted(_strip_polygons(g), key=lambda P: P.vertices)))]
    if g == 1:
        jobs.append(("fixed", (simplex(3),)))
    for cls in enumerate_by_lattice_points(g):
        P = cls.representative
        if not P.is_full:
            continue
        res = relaxation(P)
        if res.integral and interior_polygon(res.relaxed) == P:
            jobs.append(("closure", res.relaxed))
    return jobs


def _run_job(job, g: int) -> list[LatticePolygon]:
    kind, payload = job
    if kind == "fixed":
        return [normal_form(P) for P in payload]
    start = normal_form(payload)
    seen = {start}
    stack = [start]
    while stack:
        D = stack.pop()
        pts = lattice_points(D)
        for v in D.vertices:
            child = convex_hull(p for p in pts if p != v)
            if not child.is_full or point_counts(child)[1] != g:
                continue
            nf = normal_form(child)
            if nf not in seen:
                seen.add(nf)
                stack.append(nf)
                if len(seen) > MAX_POLYGONS:
                    raise ResourceLimitError(f"closure from {payload} exceeded {MAX_POLYGONS}")
    return list(seen)


def _run_job_star(args):
    return _run_job(*args)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("POLYBN_THREADS", "1")))
    except ValueError:
        return 1


_interior_cache: dict[int, tuple[PolygonClass, ...]] = {}


def _interior_level(g: int, threads: int) -> tuple[PolygonClass, ...]:
    if g in _interior_cache:
        return _interior_cache[g]
    jobs = _seeds(g)
    found: set[LatticePolygon] = set()
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for polys in pool.map(_run_job_star, [(j, g) for j in jobs]):
                found.update(polys)
    else:
        for j in jobs:
            found.update(_run_job(j, g))
    result = tuple(_sorted_classes(found))
    _interior_cache[g] = result
    return result


def _check_genus(g: int) -> None:
    if not (1 <= g <= MAX_INTERIOR):
        raise UnsupportedRangeError(f"interior point count must be in 1..{MAX_INTERIOR}, got {g}")


def enumerate_by_interior_points(g: int, threads: Optional[int] = None) -> list[PolygonClass]:
    """All classes of two-dimensional lattice polygons with exactly g interior lattice points."""
    _check_genus(g)
    return list(_interior_level(g, threads or default_threads()))


def interior_classes(g: int, threads: Optional[int] = None) -> list[PolygonClass]:
    """Distinct classes of interior polygons over all polygons with g interior points."""
    _check_genus(g)
    polys = {normal_form(interior_polygon(c.representative))
             for c in enumerate_by_interior_points(g, threads)}
    return _sorted_classes(polys)


def clear_caches() -> None:
    """Forget memoized enumeration results (used to check run-to-run determinism)."""
    _level.cache_clear()
    _interior_cache.clear()
