"""Slow brute-force counterparts of the enumerators, used to cross-check them.

None of this shares search logic with ``enumeration``: polygons are built as
hulls of raw point subsets of a fixed box, and the only pruning is by
monotonicity (adding points never removes lattice points or interior points).
"""

from __future__ import annotations

from .lattice import (
    LatticePolygon,
    cross,
    point_counts,
    interior_lattice_points,
    lattice_points,
    normal_form,
)


def _subset_hulls(box: list[tuple[int, int]], fixed: list[tuple[int, int]], max_size: int, keep, prune):
    """DFS over subsets of ``box`` (in index order) added to ``fixed``; yields hulls passing ``keep``."""
    def rec(start, chosen):
        P = LatticePolygon(tuple(fixed + chosen))
        if prune(P):
            return
        if keep(P):
            yield P
        if len(chosen) == max_size:
            return
        for k in range(start, len(box)):
            chosen.append(box[k])
            yield from rec(k + 1, chosen)
            chosen.pop()

    yield from rec(0, [])


def naive_by_lattice_points(n: int, size: int = 4) -> set[LatticePolygon]:
    """Normal forms of hulls of at most n points of [0, size]^2 having exactly n lattice points."""
    box = [(x, y) for x in range(size + 1) for y in range(size + 1)]
    found = set()
    for P in _subset_hulls(
        box, [], n,
        keep=lambda P: P.vertices and len(lattice_points(P)) == n,
        prune=lambda P: len(lattice_points(P)) > n,
    ):
        found.add(normal_form(P))
    return found


def naive_by_interior_points(g: int = 1, radius: int = 2) -> set[LatticePolygon]:
    """Normal forms of hulls in [-radius, radius]^2 whose interior lattice points are exactly
    the g points (0,0), (1,0), ... on the x-axis (g = 1 gives the origin)."""
    target = [(k, 0) for k in range(g)]
    box = [(x, y) for x in range(-radius, radius + g) for y in range(-radius, radius + 1)
           if (x, y) not in target]

    def interior_ok(P):
        return set(interior_lattice_points(P)) <= set(target)

    found = set()
    for P in _subset_hulls(
        box, [], 8,
        keep=lambda P: P.is_full and interior_lattice_points(P) == target,
        prune=lambda P: not interior_ok(P),
    ):
        found.add(normal_form(P))
    return found


def _strictly_inside(Q: LatticePolygon, p) -> bool:
    return all(cross(a, b, p) > 0 for a, b in Q.edges())


def brute_force_interior_witness(P: LatticePolygon, margin: int = 4, max_points: int = 30):
    """Search polygons Q containing P, inside P's bounding box grown by ``margin``, with
    interior polygon exactly P.  Returns a witness or None."""
    target = lattice_points(P)
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    box = [(x, y) for x in range(min(xs) - margin, max(xs) + margin + 1)
           for y in range(min(ys) - margin, max(ys) + margin + 1)]

    def admissible(R):
        n_all, n_int = point_counts(R)
        inside = sum(1 for t in target if _strictly_inside(R, t))
        return n_all <= max_points and n_int == inside, inside

    # a point whose hull with P already has a foreign interior point is never usable
    box = [p for p in box if admissible(LatticePolygon(P.vertices + (p,)))[0]]
    seen = {P}
    stack = [P]
    while stack:
        Q = stack.pop()
        for p in box:
            R = LatticePolygon(Q.vertices + (p,))
            if R in seen:
                continue
            seen.add(R)
            ok, inside = admissible(R)
            if not ok:
                continue  # supersets are hopeless
            if inside == len(target):
                return R
            stack.append(R)
    return None
