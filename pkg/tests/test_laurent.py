from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polybn.laurent import (
    EmptyPolynomialError,
    LaurentPoly,
    LaurentSyntaxError,
    format_poly,
    newton_polygon,
    parse,
)
from polybn.lattice import convex_hull, simplex

monomials = st.tuples(st.integers(-6, 6), st.integers(-6, 6))
coefficients = st.fractions(min_value=-50, max_value=50, max_denominator=12).filter(bool)
polys = st.dictionaries(monomials, coefficients, min_size=1, max_size=8).map(LaurentPoly)


def test_support_examples():
    assert set(parse("x^3 + y^3 + 1 + x*y").support()) == {(3, 0), (0, 3), (0, 0), (1, 1)}
    assert parse("1 + x + x*y + x*y^2").support() == [(0, 0), (1, 0), (1, 1), (1, 2)]


def test_cancellation():
    with pytest.raises(EmptyPolynomialError):
        parse("x - x")
    assert parse("x + y - x").support() == [(0, 1)]


def test_newton_polygon_examples():
    assert newton_polygon(parse("1 + x + x*y + x*y^2")) == convex_hull([(0, 0), (1, 0), (1, 2)])
    generic = " + ".join(f"x^{i}*y^{j}" for i in range(6) for j in range(6 - i))
    assert newton_polygon(parse(generic)) == simplex(5)
    assert newton_polygon(parse("x^-2*y^-1 + x + y")) == convex_hull([(-2, -1), (1, 0), (0, 1)])


@pytest.mark.parametrize("text,terms", [
    ("3/2 x**2 y - 7", {(2, 1): Fraction(3, 2), (0, 0): Fraction(-7)}),
    ("x^(-3)", {(-3, 0): 1}),
    ("-x*x*y", {(2, 1): -1}),
    ("2.5*y^2", {(0, 2): Fraction(5, 2)}),
    ("  x  y ", {(1, 1): 1}),
    ("y^0 + 1", {(0, 0): 2}),
    ("+x-y", {(1, 0): 1, (0, 1): -1}),
])
def test_parse_variants(text, terms):
    assert dict(parse(text).terms) == terms


@pytest.mark.parametrize("text,pos", [
    ("", 0),
    ("1 + ", 4),
    ("x^", 2),
    ("z", 0),
    ("x*", 2),
    ("1/0", 2),
    ("x ^ (2", 6),
    ("x y )", 4),
])
def test_syntax_errors(text, pos):
    with pytest.raises(LaurentSyntaxError) as info:
        parse(text)
    assert info.value.position == pos


def test_format():
    assert format_poly(parse("1 + x + x*y + x*y^2")) == "x*y^2 + x*y + x + 1"
    assert format_poly(parse("-1/2 - x^-1")) == "-1/2 - x^-1"
    assert format_poly(LaurentPoly()) == "0"


@given(polys)
def test_round_trip(f):
    assert parse(format_poly(f)) == f


@given(polys)
def test_newton_polygon_contains_support(f):
    P = newton_polygon(f)
    assert all(convex_hull(list(P.vertices) + [m]) == P for m in f.support())
    assert set(P.vertices) <= set(f.support())
