from itertools import product

import pytest
from hypothesis import given, strategies as st

from polybn.errors import EmptyPolygonError
from polybn.lattice import (
    AffineUnimodularMap,
    LatticePolygon,
    PrimitiveVector,
    apply_map,
    area_twice,
    convex_hull,
    equivalent,
    interior_lattice_points,
    interior_polygon,
    is_standard_simplex_multiple,
    lattice_points,
    lattice_width,
    normal_form,
    normal_form_with_map,
    parse_points,
    parse_polygon,
    pick_area_twice,
    point_counts,
    simplex,
    width_along,
)

FIVE = convex_hull([(0, 0), (5, 0), (0, 5)])
UNIT_SQUARE = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
TOY = convex_hull([(0, 0), (1, 0), (1, 2)])


# -- oracles ---------------------------------------------------------------

def grid_scan(P, strict=False):
    """Lattice points by testing every box point against every edge."""
    if not P.vertices:
        return []
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    out = []
    for x, y in product(range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1)):
        if len(P.vertices) == 1:
            ok = not strict
        elif len(P.vertices) == 2:
            (ax, ay), (bx, by) = P.vertices
            on = (bx - ax) * (y - ay) - (by - ay) * (x - ax) == 0
            ok = on and not strict
        else:
            sides = [(b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) for a, b in P.edges()]
            ok = all(s > 0 for s in sides) if strict else all(s >= 0 for s in sides)
        if ok:
            out.append((x, y))
    return sorted(out)


def box_width(P, bound):
    best = None
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) == (0, 0):
                continue
            vals = [a * x + b * y for x, y in P.vertices]
            w = max(vals) - min(vals)
            best = w if best is None else min(best, w)
    return best


points = st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=1, max_size=10)
full_points = points.filter(lambda pts: convex_hull(pts).is_full)


UNIMODULAR_10 = [
    m for m in product(range(-10, 11), repeat=4) if m[0] * m[3] - m[1] * m[2] in (1, -1)
]


@st.composite
def unimodular(draw):
    m = draw(st.sampled_from(UNIMODULAR_10))
    t = draw(st.tuples(st.integers(-10, 10), st.integers(-10, 10)))
    return AffineUnimodularMap(*m, *t)


# -- hull ------------------------------------------------------------------

def test_hull_examples():
    assert convex_hull([]).vertices == ()
    assert convex_hull([(0, 0), (1, 0), (2, 0)]).vertices == ((0, 0), (2, 0))
    assert convex_hull([(0, 0), (5, 0), (0, 5), (1, 1)]).vertices == ((0, 0), (5, 0), (0, 5))


@given(points)
def test_hull_is_idempotent_and_contains_input(pts):
    P = convex_hull(pts)
    assert convex_hull(P.vertices) == P
    inside = set(lattice_points(P))
    assert all(tuple(p) in inside for p in pts)


# -- point counts ------------------------------------------------------------

def test_lattice_point_examples():
    assert lattice_points(TOY) == [(0, 0), (1, 0), (1, 1), (1, 2)]
    assert lattice_points(LatticePolygon(())) == []
    assert len(lattice_points(FIVE)) == 21


def test_interior_examples():
    assert interior_lattice_points(FIVE) == sorted([(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3)])
    # (1,1) lies on the edge from (1,0) to (1,2)
    assert interior_lattice_points(TOY) == []
    assert interior_lattice_points(UNIT_SQUARE) == []


def test_interior_polygon_examples():
    assert interior_polygon(FIVE).vertices == ((1, 1), (3, 1), (1, 3))
    assert interior_polygon(UNIT_SQUARE).vertices == ()
    assert interior_polygon(simplex(3)).vertices == ((1, 1),)


def test_area_examples():
    assert area_twice(simplex(1)) == 1
    assert area_twice(FIVE) == 25
    assert area_twice(convex_hull([(0, 0), (4, 2)])) == 0
    assert pick_area_twice(TOY) == 2
    assert pick_area_twice(FIVE) == 25
    assert pick_area_twice(UNIT_SQUARE) == 2


@given(points)
def test_scan_matches_grid_oracle(pts):
    P = convex_hull(pts)
    assert lattice_points(P) == grid_scan(P)
    assert interior_lattice_points(P) == grid_scan(P, strict=True)


@given(full_points)
def test_pick_identity(pts):
    P = convex_hull(pts)
    n, i = point_counts(P)
    assert (n, i) == (len(lattice_points(P)), len(interior_lattice_points(P)))
    assert pick_area_twice(P) == area_twice(P)


# -- width -------------------------------------------------------------------

def test_width_along_examples():
    assert width_along(FIVE, (1, 0)) == 5
    assert width_along(FIVE, (1, 1)) == 5
    assert width_along(convex_hull([(7, -3)]), (2, 3)) == 0
    with pytest.raises(EmptyPolygonError):
        width_along(LatticePolygon(()), (1, 0))


def test_lattice_width_examples():
    assert lattice_width(simplex(1)).width == 1
    assert lattice_width(FIVE).width == 5
    assert lattice_width(convex_hull([(1, 1), (3, 1), (1, 3)])).width == 2
    assert lattice_width(LatticePolygon(())).width == -1
    assert lattice_width(convex_hull([(0, 0), (4, 2)])).width == 0


@given(full_points)
def test_width_certificate_matches_box_oracle(pts):
    P = convex_hull(pts)
    cert = lattice_width(P)
    assert width_along(P, cert.direction) == cert.width
    # any direction with width w has |a|,|b| <= w for a polygon in a 16-box... bound 17 is safe
    assert cert.width == box_width(P, 17)


@given(full_points)
def test_width_bounded_by_area(pts):
    P = convex_hull(pts)
    assert 3 * lattice_width(P).width ** 2 <= 4 * area_twice(P)


def test_primitive_vector_canonical_sign():
    assert PrimitiveVector.canonical(-2, 3).as_tuple() == (2, -3)
    assert PrimitiveVector.canonical(0, -1).as_tuple() == (0, 1)
    with pytest.raises(ValueError):
        PrimitiveVector(2, 4)


# -- maps and normal forms -----------------------------------------------------

def test_map_examples():
    assert apply_map(FIVE, AffineUnimodularMap.identity()) == FIVE
    shear = AffineUnimodularMap(1, 1, 0, 1)
    assert apply_map(simplex(1), shear) == convex_hull([(0, 0), (1, 0), (1, 1)])
    swap = AffineUnimodularMap(0, 1, 1, 0)
    assert apply_map(convex_hull([(0, 0), (2, 1)]), swap) == convex_hull([(0, 0), (1, 2)])
    with pytest.raises(ValueError):
        AffineUnimodularMap(2, 0, 0, 1)


def test_equivalence_examples():
    assert equivalent(simplex(1), convex_hull([(4, 4), (5, 4), (5, 5)]))
    assert not equivalent(simplex(1), simplex(2))


@given(points, unimodular())
def test_normal_form_is_invariant(pts, T):
    P = convex_hull(pts)
    Q = apply_map(P, T)
    assert normal_form(Q) == normal_form(P)
    assert lattice_width(Q).width == lattice_width(P).width
    assert len(lattice_points(Q)) == len(lattice_points(P))
    assert area_twice(Q) == area_twice(P)


@given(points)
def test_normal_form_map_is_a_witness(pts):
    P = convex_hull(pts)
    N, T = normal_form_with_map(P)
    assert apply_map(P, T) == N
    assert normal_form(N) == N


@given(unimodular(), unimodular())
def test_map_group_laws(S, T):
    p = (3, -7)
    assert S.compose(T)(p) == S(T(p))
    assert S.inverse()(S(p)) == p


def test_simplex_detection():
    assert is_standard_simplex_multiple(FIVE) == 5
    assert is_standard_simplex_multiple(convex_hull([(1, 1), (3, 1), (1, 3)])) == 2
    assert is_standard_simplex_multiple(UNIT_SQUARE) is None
    # same edge lengths but twice the area of 2 Sigma
    assert is_standard_simplex_multiple(convex_hull([(0, 0), (2, 0), (2, 4)])) is None


def test_parse_formats():
    assert parse_points("0,0 5,0 0,5") == [(0, 0), (5, 0), (0, 5)]
    assert parse_points("[[0,0],[5,0],[0,5]]") == [(0, 0), (5, 0), (0, 5)]
    assert parse_polygon("0,0 5,0 0,5 1,1") == FIVE
    assert parse_polygon("").vertices == ()
    for bad in ("0,0 5", "a,b", "[[0,0,1]]", "[[0,0],"):
        with pytest.raises(ValueError):
            parse_polygon(bad)
