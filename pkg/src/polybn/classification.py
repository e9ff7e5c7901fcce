"""Re-derivation of which interior Newton polygons allow Brill-Noether general curves.

The decisions are combinatorial.  A class is "admissible" when nothing about
its widths forces a rank-1 divisor of negative Brill-Noether number; two
classes that pass the width test are removed by named rules that stand in for
algebro-geometric arguments (plane quintics, and the genus-10 curves of
Clifford dimension 3).  Existence of curves realizing admissibility is not
checked here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .brill_noether import (
    DivisorHypothesis,
    gonality_bound_theorem,
    min_degree_nonneg_rho,
    plane_curve_profile,
    rho,
)
from .enumeration import (
    PolygonClass,
    enumerate_by_interior_points,
    enumerate_by_lattice_points,
    interior_classes,
    realizable_as_interior,
)
from .errors import UnsupportedRangeError
from .lattice import (
    LatticePolygon,
    interior_polygon,
    is_standard_simplex_multiple,
    normal_form,
    simplex,
)

WIDTH_EXCLUDED = "width-excluded"
PLANE_QUINTIC = "plane-quintic-rule"
GENUS10_CLIFFORD = "genus10-clifford-rule"
LARGEG = "largeg-inequality"
ADMISSIBLE = "admissible"

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Verdict:
    polygon_class: PolygonClass
    genus: int
    admissible: bool
    reason: str
    threshold: int = 0
    width_cap: int = 0

    def __post_init__(self):
        if self.admissible != (self.reason == ADMISSIBLE):
            raise ValueError("admissible must agree with reason")

    def to_json(self) -> dict:
        P = self.polygon_class.representative
        return {
            "vertices": P.to_json(),
            "dimension": P.dimension,
            "genus": self.genus,
            "lw": self.polygon_class.lw,
            "admissible": self.admissible,
            "reason": self.reason,
            "rank1_threshold": self.threshold,
            "gonality_cap": self.width_cap,
        }


def _simplex_index(P: LatticePolygon) -> Optional[int]:
    """k such that P is equivalent to k times the standard triangle (a point counts as k = 0)."""
    if len(P.vertices) == 1:
        return 0
    return is_standard_simplex_multiple(P)


def plane_quintic_rho() -> int:
    # a plane quintic carries its g^2_5
    return rho(DivisorHypothesis(6, 5, 2))


def genus10_clifford_rho() -> int:
    # Clifford dimension 3 at genus 10: a rank-3 divisor of degree at most 9
    return rho(DivisorHypothesis(10, 9, 3))


def _interior_verdict(cls: PolygonClass) -> Verdict:
    P = cls.representative
    g = cls.n_points
    threshold = min_degree_nonneg_rho(g, 1)
    cap = cls.lw + 2
    k = _simplex_index(P)
    if k is not None:
        # the outer polygon can be (k+3) times the standard triangle
        cap = max(cap, cls.lw + 3)
    if cap < threshold:
        return Verdict(cls, g, False, WIDTH_EXCLUDED, threshold, cap)
    if k == 2:
        return Verdict(cls, g, False, PLANE_QUINTIC, threshold, cap)
    return Verdict(cls, g, True, ADMISSIBLE, threshold, cap)


def candidate_interior_classes(max_points: int) -> list[PolygonClass]:
    """Realizable interior-polygon classes with at most max_points lattice points."""
    out = []
    for n in range(1, max_points + 1):
        out.extend(c for c in enumerate_by_lattice_points(n) if realizable_as_interior(c.representative))
    return out


def classify_interior_polygons(max_points: int = 6) -> list[Verdict]:
    if not 1 <= max_points <= 6:
        raise UnsupportedRangeError("max_points must be in 1..6")
    return [_interior_verdict(c) for c in candidate_interior_classes(max_points)]


# -- genus 7..12 ------------------------------------------------------------

@dataclass
class MidrangeSummary:
    g: int
    n_polygons: int
    max_lw: int
    half_genus: int
    rank1_threshold: int
    max_gonality_cap: int
    verdicts: list[Verdict] = field(default_factory=list)
    exceptional: Optional[PolygonClass] = None

    @property
    def confirmed(self) -> bool:
        return not any(v.admissible for v in self.verdicts)

    def to_json(self) -> dict:
        counts: dict[str, int] = {}
        for v in self.verdicts:
            counts[v.reason] = counts.get(v.reason, 0) + 1
        return {
            "g": self.g,
            "n_polygons": self.n_polygons,
            "max_lw": self.max_lw,
            "ceil_half_g": self.half_genus,
            "rank1_threshold": self.rank1_threshold,
            "max_gonality_cap": self.max_gonality_cap,
            "n_interior_classes": len(self.verdicts),
            "reasons": dict(sorted(counts.items())),
            "exceptional_class": None if self.exceptional is None else self.exceptional.to_json(),
            "confirmed": self.confirmed,
        }


def _gonality_cap(cls: PolygonClass) -> int:
    """Width cap, sharpened to d - 1 when the polygon is d times the standard triangle."""
    d = is_standard_simplex_multiple(cls.representative)
    if d is not None and d >= 2:
        return plane_curve_profile(d)[1]
    return cls.lw


def verify_midrange(g: int, threads: Optional[int] = None) -> MidrangeSummary:
    if not 7 <= g <= 12:
        raise UnsupportedRangeError("midrange verification covers genus 7..12")
    polys = enumerate_by_interior_points(g, threads)
    threshold = min_degree_nonneg_rho(g, 1)
    caps: dict[LatticePolygon, int] = {}
    for c in polys:
        key = normal_form(interior_polygon(c.representative))
        caps[key] = max(caps.get(key, -1), _gonality_cap(c))
    classes = interior_classes(g, threads)
    summary = MidrangeSummary(
        g=g,
        n_polygons=len(polys),
        max_lw=max(c.lw for c in polys),
        half_genus=(g + 1) // 2,
        rank1_threshold=threshold,
        max_gonality_cap=max(caps.values()),
    )
    wide = [c for c in classes if c.lw >= 4]
    if g == 10:
        if len(wide) != 1:
            raise AssertionError(f"expected one genus-10 interior class of width >= 4, found {len(wide)}")
        summary.exceptional = wide[0]
    for c in classes:
        cap = caps[c.representative]
        if g == 10 and c is summary.exceptional:
            summary.verdicts.append(Verdict(c, g, False, GENUS10_CLIFFORD, threshold, cap))
        elif cap < threshold:
            summary.verdicts.append(Verdict(c, g, False, WIDTH_EXCLUDED, threshold, cap))
        else:
            summary.verdicts.append(Verdict(c, g, True, ADMISSIBLE, threshold, cap))
    return summary


# -- genus > 12 -------------------------------------------------------------

def largeg_holds(g: int) -> bool:
    """Whether ceil(g/2) + 1 <= floor(sqrt(8/3 (g - 5/2)) + 2)."""
    return min_degree_nonneg_rho(g, 1) <= gonality_bound_theorem(g)


def verify_largeg(g_max: int) -> list[tuple[int, bool]]:
    if g_max < 13:
        raise UnsupportedRangeError("g_max must be at least 13")
    return [(g, largeg_holds(g)) for g in range(3, g_max + 1)]


# -- report -----------------------------------------------------------------

def plane_quintic_interior_class() -> PolygonClass:
    return PolygonClass.of(simplex(2))


def full_report(max_genus: int = 6, threads: Optional[int] = None, largeg_max: int = 200) -> dict:
    verdicts = classify_interior_polygons(max_genus)
    admissible = [v for v in verdicts if v.admissible]
    excluded = [v for v in verdicts if not v.admissible]
    midrange = {g: verify_midrange(g, threads) for g in range(7, 13)}
    table = verify_largeg(largeg_max)
    breakdown: dict[str, int] = {}
    for v in admissible:
        dim = v.polygon_class.representative.dimension
        breakdown[dim] = breakdown.get(dim, 0) + 1
    return {
        "schema": SCHEMA_VERSION,
        "max_genus": max_genus,
        "admissible": {
            "count": len(admissible),
            "by_dimension": dict(sorted(breakdown.items())),
            "classes": [v.to_json() for v in admissible],
        },
        "excluded": [v.to_json() for v in excluded],
        "genus10_exceptional": midrange[10].exceptional.to_json(),
        "plane_quintic_interior": plane_quintic_interior_class().to_json(),
        "midrange": {str(g): s.to_json() for g, s in midrange.items()},
        "crossover": {
            "crossover_genus": max(g for g, ok in table if ok),
            "failing_genera_up_to_12": [g for g, ok in table if not ok and g <= 12],
            "holds": [[g, min_degree_nonneg_rho(g, 1), gonality_bound_theorem(g), ok]
                      for g, ok in table if g <= 20],
            "checked_up_to": largeg_max,
        },
        "rho_rules": {
            PLANE_QUINTIC: plane_quintic_rho(),
            GENUS10_CLIFFORD: genus10_clifford_rho(),
        },
    }
