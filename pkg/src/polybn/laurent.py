"""Laurent polynomials in x and y with exact rational coefficients.

Grammar (whitespace is ignored)::

    poly     := [sign] term (sign term)*
    term     := coeff [['*'] monomial] | monomial
    monomial := factor (['*'] factor)*
    factor   := ('x' | 'y') [('^' | '**') exponent]
    exponent := [sign] digits | '(' [sign] digits ')'
    coeff    := digits ['/' digits] | digits '.' digits

Examples: ``"x^3 + y^3 + 1 + x*y"``, ``"x^-2*y^-1 + x + y"``, ``"3/2 x**2 y - 7"``.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import PolybnError
from .lattice import LatticePolygon, convex_hull

Monomial = tuple[int, int]


class LaurentSyntaxError(PolybnError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EmptyPolynomialError(PolybnError, ValueError):
    pass


class LaurentPoly:
    """Finite map from exponent pairs (i, j) to nonzero rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(int(i), int(j))] = clean.get((int(i), int(j)), 0) + c
        self._terms = MappingProxyType({k: c for k, c in clean.items() if c})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def support(self) -> list[Monomial]:
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    for var, e in (("x", i), ("y", j)):
        if e == 1:
            parts.append(var)
        elif e:
            parts.append(f"{var}^{e}")
    return "*".join(parts)


def format_poly(f: LaurentPoly) -> str:
    """Canonical text: terms by decreasing (i, j), coefficient 1 omitted in front of monomials."""
    if not f:
        return "0"
    out = []
    for (i, j) in sorted(f.terms, reverse=True):
        c = f.terms[(i, j)]
        mono = _monomial_text(i, j)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise LaurentSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s: str) -> bool:
        self.skip()
        if self.text.startswith(s, self.pos):
            self.pos += len(s)
            return True
        return False

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return self.text[start:self.pos]

    def coefficient(self) -> Fraction:
        whole = self.digits()
        if self.pos < len(self.text) and self.text[self.pos] == ".":
            self.pos += 1
            return Fraction(f"{whole}.{self.digits()}")
        if self.take("/"):
            self.skip()
            start = self.pos
            den = int(self.digits())
            if den == 0:
                self.pos = start
                self.error("zero denominator")
            return Fraction(int(whole), den)
        return Fraction(int(whole))

    def exponent(self) -> int:
        paren = self.take("(")
        sign = 1
        if self.take("-"):
            sign = -1
        else:
            self.take("+")
        e = sign * int(self.digits())
        if paren and not self.take(")"):
            self.error("expected ')'")
        return e

    def factor(self) -> Monomial:
        ch = self.peek()
        if ch not in ("x", "y"):
            self.error("expected 'x' or 'y'")
        self.pos += 1
        e = 1
        if self.take("**") or self.take("^"):
            e = self.exponent()
        return (e, 0) if ch == "x" else (0, e)

    def term(self) -> tuple[Fraction, Monomial]:
        coeff = Fraction(1)
        i = j = 0
        ch = self.peek()
        if ch.isdigit():
            coeff = self.coefficient()
            if self.take("*"):
                if self.peek() not in ("x", "y"):
                    self.error("expected 'x' or 'y' after '*'")
            if self.peek() not in ("x", "y"):
                return coeff, (0, 0)
        elif ch not in ("x", "y"):
            self.error("expected a term")
        di, dj = self.factor()
        i, j = i + di, j + dj
        while True:
            save = self.pos
            star = self.take("*")
            if self.peek() in ("x", "y"):
                di, dj = self.factor()
                i, j = i + di, j + dj
            else:
                if star:
                    self.error("expected 'x' or 'y' after '*'")
                self.pos = save
                return coeff, (i, j)

    def poly(self) -> dict[Monomial, Fraction]:
        terms: dict[Monomial, Fraction] = {}
        sign = 1
        if self.take("-"):
            sign = -1
        else:
            self.take("+")
        while True:
            c, m = self.term()
            terms[m] = terms.get(m, Fraction(0)) + sign * c
            if self.take("+"):
                sign = 1
            elif self.take("-"):
                sign = -1
            elif self.peek() == "":
                return terms
            else:
                self.error(f"unexpected {self.peek()!r}")


def parse(text: str) -> LaurentPoly:
    if not text.strip():
        raise LaurentSyntaxError("empty input", 0)
    f = LaurentPoly(_Parser(text).poly())
    if not f:
        raise EmptyPolynomialError("all terms cancel")
    return f


def newton_polygon(f: LaurentPoly) -> LatticePolygon:
    if not f:
        raise EmptyPolynomialError("the zero polynomial has no Newton polygon")
    return convex_hull(f.support())
