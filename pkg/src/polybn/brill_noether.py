"""Brill-Noether arithmetic on (genus, degree, rank) triples and gonality caps from polygons.

Nothing here computes divisors on actual curves.  A ``DivisorHypothesis`` is
just the numerical data (g, d, r); the functions below do the exact integer
bookkeeping used when deciding whether a polygon can carry a Brill-Noether
general curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional

from .errors import DegeneratePolygonError, PreconditionError
from .lattice import (
    LatticePolygon,
    WidthCertificate,
    interior_lattice_points,
    interior_polygon,
    is_standard_simplex_multiple,
    lattice_width,
)


@dataclass(frozen=True)
class DivisorHypothesis:
    g: int
    d: int
    r: int


def rho(h: DivisorHypothesis) -> int:
    return h.g - (h.r + 1) * (h.g - h.d + h.r)


def min_degree_nonneg_rho(g: int, r: int) -> int:
    """Smallest d with rho(g, d, r) >= 0."""
    return g + r - g // (r + 1)


def serre_dual(h: DivisorHypothesis) -> DivisorHypothesis:
    """The triple of K - D: degree 2g-2-d, rank from Riemann-Roch."""
    return DivisorHypothesis(h.g, 2 * h.g - 2 - h.d, h.r - h.d + h.g - 1)


def _drop_points(h: DivisorHypothesis, target: int) -> Optional[DivisorHypothesis]:
    # removing k general points lowers degree and rank by k; g-d+r is unchanged
    if h.r < 1:
        return None
    if h.r <= target:
        return h
    k = h.r - target
    out = DivisorHypothesis(h.g, h.d - k, h.r - k)
    return out if rho(out) < 0 else None


def reduce_to_low_rank(h: DivisorHypothesis) -> DivisorHypothesis:
    """Trade a negative-rho triple for one of rank 1 (g < 5) or rank at most 2 (g in {5, 6}).

    Small degree (d <= g): subtract points first; otherwise pass to K - D
    first.  If the preferred route loses negativity the other one is used;
    one of them always works because rho < 0 means (r+1)(g-d+r) > g and the
    two routes keep one factor or the other.
    """
    if rho(h) >= 0:
        raise PreconditionError(f"rho{(h.g, h.d, h.r)} = {rho(h)} is not negative")
    if h.r < 1:
        raise PreconditionError("rank must be at least 1")
    if h.g > 6:
        raise PreconditionError("reduction is only defined for genus at most 6")
    target = 1 if h.g < 5 else 2

    def direct():
        return _drop_points(h, target)

    def dual():
        return _drop_points(serre_dual(h), target)

    routes = (direct, dual) if h.d <= h.g else (dual, direct)
    for route in routes:
        out = route()
        if out is not None:
            return out
    raise AssertionError(f"no reduction found for {h}")  # unreachable for valid input


def gonality_cap_from_width(P: LatticePolygon) -> int:
    if not P.is_full:
        raise DegeneratePolygonError("gonality cap needs a two-dimensional Newton polygon")
    return lattice_width(P).width


def width_from_interior(P: LatticePolygon) -> int:
    """lw(P) predicted from the interior polygon: +3 for dilated standard triangles (d >= 2), else +2."""
    if not P.is_full:
        raise DegeneratePolygonError("needs a two-dimensional polygon")
    inner = lattice_width(interior_polygon(P)).width
    d = is_standard_simplex_multiple(P)
    return inner + (3 if d is not None and d >= 2 else 2)


def gonality_bound_theorem(g: int) -> int:
    """Largest integer G with 3(G-2)^2 <= 8g - 20, i.e. floor(sqrt(8/3 (g - 5/2)) + 2)."""
    if g < 3:
        raise PreconditionError("the area bound needs genus at least 3")
    return 2 + isqrt((8 * g - 20) // 3)


def plane_curve_profile(d: int) -> tuple[int, int]:
    """(genus, gonality) of a smooth plane curve of degree d."""
    if d < 1:
        raise PreconditionError("degree must be positive")
    return (d - 1) * (d - 2) // 2, d - 1


@dataclass(frozen=True)
class CurveProfile:
    polygon: LatticePolygon
    genus_if_smooth: int
    lw_delta: WidthCertificate
    lw_interior: WidthCertificate
    gonality_cap: int
    simplex_d: Optional[int]

    @property
    def interior(self) -> LatticePolygon:
        return interior_polygon(self.polygon)


def profile(P: LatticePolygon) -> CurveProfile:
    if not P.is_full:
        raise DegeneratePolygonError("curve profile needs a two-dimensional Newton polygon")
    lw = lattice_width(P)
    lw_in = lattice_width(interior_polygon(P))
    predicted = width_from_interior(P)
    if predicted != lw.width:
        raise AssertionError(f"width relation broken for {P}: {lw.width} vs {predicted}")
    return CurveProfile(
        polygon=P,
        genus_if_smooth=len(interior_lattice_points(P)),
        lw_delta=lw,
        lw_interior=lw_in,
        gonality_cap=lw.width,
        simplex_d=is_standard_simplex_multiple(P),
    )
