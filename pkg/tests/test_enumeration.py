import pytest

from polybn.enumeration import (
    PolygonClass,
    enumerate_by_interior_points,
    enumerate_by_lattice_points,
    interior_classes,
    realizable_as_interior,
    relaxation,
)
from polybn.errors import EmptyPolygonError, UnsupportedRangeError
from polybn.lattice import (
    LatticePolygon,
    convex_hull,
    equivalent,
    interior_lattice_points,
    interior_polygon,
    lattice_points,
    normal_form,
    point_counts,
    simplex,
)
from polybn.oracles import brute_force_interior_witness, naive_by_interior_points, naive_by_lattice_points

# Regression values; n <= 5 and g = 1 are also checked against brute force below.
# The interior-point counts agree with the published table of polygon counts by genus.
BY_POINTS = [1, 1, 2, 4, 7, 14, 22, 42, 68, 112, 176, 287]
BY_INTERIOR = [16, 45, 120, 211, 403, 714, 1023, 1830, 2700, 3659, 6125, 8101]
INTERIOR_CLASSES = [1, 1, 2, 4, 5, 6, 8, 12, 17, 22, 26, 38]


def test_small_levels_by_points():
    assert [c.representative for c in enumerate_by_lattice_points(1)] == [convex_hull([(0, 0)])]
    assert [c.representative for c in enumerate_by_lattice_points(2)] == [convex_hull([(0, 0), (1, 0)])]
    three = [c.representative for c in enumerate_by_lattice_points(3)]
    assert len(three) == 2
    assert any(equivalent(P, simplex(1)) for P in three)
    assert any(equivalent(P, convex_hull([(0, 0), (2, 0)])) for P in three)


@pytest.mark.parametrize("n", range(1, 13))
def test_counts_by_points(n):
    classes = enumerate_by_lattice_points(n)
    assert len(classes) == BY_POINTS[n - 1]
    assert all(c.n_points == n for c in classes)


@pytest.mark.parametrize("n", range(1, 6))
def test_points_enumerator_matches_brute_force(n):
    assert naive_by_lattice_points(n) == {c.representative for c in enumerate_by_lattice_points(n)}


@pytest.mark.parametrize("g", range(1, 10))
def test_counts_by_interior(g):
    classes = enumerate_by_interior_points(g)
    assert len(classes) == BY_INTERIOR[g - 1]
    reps = [c.representative for c in classes]
    assert len(set(reps)) == len(reps)
    for c in classes:
        assert c.representative.is_full
        assert point_counts(c.representative)[1] == g
        assert normal_form(c.representative) == c.representative


def test_interior_enumerator_matches_brute_force():
    assert naive_by_interior_points(1) == {c.representative for c in enumerate_by_interior_points(1)}


@pytest.mark.parametrize("g", range(1, 8))
def test_closed_under_vertex_removal(g):
    reps = {c.representative for c in enumerate_by_interior_points(g)}
    for P in reps:
        pts = lattice_points(P)
        for v in P.vertices:
            child = convex_hull(p for p in pts if p != v)
            if child.is_full and point_counts(child)[1] == g:
                assert normal_form(child) in reps


@pytest.mark.parametrize("g", range(1, 10))
def test_interior_class_counts(g):
    classes = interior_classes(g)
    assert len(classes) == INTERIOR_CLASSES[g - 1]
    # the same classes come out of the realizability test on g-point polygons
    realizable = [c for c in enumerate_by_lattice_points(g) if realizable_as_interior(c.representative)]
    assert {c.representative for c in realizable} == {c.representative for c in classes}


def test_genus_ten_interiors():
    classes = interior_classes(10)
    assert len(classes) == 22
    wide = [c for c in classes if c.lw >= 4]
    assert [c.representative for c in wide] == [convex_hull([(0, 0), (2, 0), (4, 6)])]
    assert wide[0].n_points == 10


def test_genus_six_contains_two_sigma():
    assert any(equivalent(c.representative, simplex(2)) for c in interior_classes(6))


def test_max_width_table():
    got = [max(c.lw for c in enumerate_by_interior_points(g)) for g in range(1, 10)]
    assert got == [3, 2, 4, 4, 4, 5, 4, 4, 5]


def test_unsupported_ranges():
    for g in (0, 13, -1):
        with pytest.raises(UnsupportedRangeError):
            enumerate_by_interior_points(g)
    with pytest.raises(UnsupportedRangeError):
        enumerate_by_lattice_points(0)


def test_relaxation_of_point():
    res = relaxation(convex_hull([(0, 0)]))
    assert res.integral
    assert interior_polygon(res.relaxed) == convex_hull([(0, 0)])
    assert realizable_as_interior(convex_hull([(0, 0)]))


def test_relaxation_of_unit_square():
    res = relaxation(convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert res.integral
    assert res.relaxed == convex_hull([(-1, -1), (2, -1), (2, 2), (-1, 2)])
    assert interior_polygon(res.relaxed) == convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])


def test_relaxation_of_two_sigma():
    res = relaxation(convex_hull([(1, 1), (3, 1), (1, 3)]))
    assert res.integral
    assert res.relaxed == simplex(5)


def test_non_integral_relaxation():
    # the two long edges meet again at (5/3, -1) after moving out
    P = convex_hull([(0, 0), (1, 0), (0, 3)])
    res = relaxation(P)
    assert not res.integral and res.relaxed is None
    assert not realizable_as_interior(P)


def test_segment_is_realizable():
    seg = convex_hull([(0, 0), (1, 0)])
    assert realizable_as_interior(seg)
    assert brute_force_interior_witness(seg) is not None


@pytest.mark.parametrize("ends", [((0, 0), (1, 0)), ((1, 1), (2, 2)), ((0, 0), (6, 4)), ((2, -1), (-1, 4)), ((3, 3), (3, 3))])
def test_degenerate_witness_any_direction(ends):
    P = convex_hull(ends)
    W = relaxation(P).relaxed
    assert W.is_full
    assert interior_polygon(W) == P


def test_realizability_matches_witness_search():
    for n in range(1, 6):
        for c in enumerate_by_lattice_points(n):
            P = c.representative
            if P.is_full:
                assert realizable_as_interior(P) == (brute_force_interior_witness(P) is not None), P


def test_soundness_on_corpus(interior_corpus):
    for P in interior_corpus:
        assert realizable_as_interior(interior_polygon(P))


def test_empty_polygon_is_rejected():
    with pytest.raises(EmptyPolygonError):
        relaxation(LatticePolygon(()))


def test_class_json_shape():
    c = PolygonClass.of(simplex(5))
    assert c.to_json() == {"vertices": [[0, 0], [5, 0], [0, 5]], "n_points": 21, "n_interior": 6, "lw": 5}
    assert len(interior_lattice_points(c.representative)) == 6
