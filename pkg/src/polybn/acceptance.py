"""The ten exit criteria, runnable without pytest (``polybn selftest``).

Each check returns a ``CriterionResult``; tests/test_acceptance.py asserts on
the same functions.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Callable

from .brill_noether import (
    DivisorHypothesis,
    gonality_bound_theorem,
    min_degree_nonneg_rho,
    profile,
    reduce_to_low_rank,
    rho,
    serre_dual,
    width_from_interior,
)
from .classification import (
    PLANE_QUINTIC,
    classify_interior_polygons,
)
from .enumeration import (
    clear_caches,
    enumerate_by_interior_points,
    enumerate_by_lattice_points,
    interior_classes,
    realizable_as_interior,
)
from .lattice import (
    LatticePolygon,
    area_twice,
    convex_hull,
    equivalent,
    interior_polygon,
    lattice_width,
    pick_area_twice,
    simplex,
)
from .oracles import (
    brute_force_interior_witness,
    naive_by_interior_points,
    naive_by_lattice_points,
)
from .report import build_outputs, enumeration_jsonl


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:>2}. {self.title}: {self.detail}"


def random_hulls(count: int = 1000, seed: int = 20121, box: int = 20) -> list[LatticePolygon]:
    """``count`` two-dimensional hulls of random point sets in a box x box grid."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pts = [(rng.randrange(box), rng.randrange(box)) for _ in range(rng.randint(3, 12))]
        P = convex_hull(pts)
        if P.is_full:
            out.append(P)
    return out


def enumeration_corpus(max_g: int = 12) -> list[LatticePolygon]:
    return [c.representative for g in range(1, max_g + 1) for c in enumerate_by_interior_points(g)]


def criterion_1() -> CriterionResult:
    # times everything `classify` does, from cold caches
    clear_caches()
    t0 = time.perf_counter()
    report_text, _ = build_outputs()
    elapsed = time.perf_counter() - t0
    report = json.loads(report_text)
    n = report["admissible"]["count"]
    ok = n == 11 == len(report["admissible"]["classes"]) and elapsed < 60
    return CriterionResult(1, "classification count", ok, f"{n} admissible classes in {elapsed:.1f}s (want 11, <60s)")


def criterion_2() -> CriterionResult:
    classes = interior_classes(10)
    wide = [c for c in classes if c.lw >= 4]
    ok = len(classes) == 22 and len(wide) == 1
    return CriterionResult(2, "genus-10 interior classes", ok,
                           f"{len(classes)} classes, {len(wide)} with lw >= 4 (want 22 and 1)")


def criterion_3() -> CriterionResult:
    want = {7: 4, 8: 4, 9: 5, 11: 5, 12: 6}
    got = {g: max(c.lw for c in enumerate_by_interior_points(g)) for g in want}
    return CriterionResult(3, "midrange width table", got == want, f"max lw {got} (want {want})")


def criterion_4() -> CriterionResult:
    bad_low = [g for g in range(3, 13) if not min_degree_nonneg_rho(g, 1) <= gonality_bound_theorem(g)]
    bad_high = [g for g in range(13, 201) if min_degree_nonneg_rho(g, 1) <= gonality_bound_theorem(g)]
    ok = not bad_low and not bad_high
    return CriterionResult(4, "large-g crossover", ok,
                           f"inequality fails inside 3..12 at {bad_low}; holds inside 13..200 at {bad_high}")


def criterion_5(corpus=None, randoms=None) -> CriterionResult:
    corpus = enumeration_corpus() if corpus is None else corpus
    randoms = random_hulls() if randoms is None else randoms
    bad = [P for P in list(corpus) + list(randoms) if lattice_width(P).width != width_from_interior(P)]
    return CriterionResult(5, "interior width relation", not bad,
                           f"{len(bad)} violations over {len(corpus)} enumerated + {len(randoms)} random polygons")


def criterion_6(corpus=None, randoms=None) -> CriterionResult:
    corpus = enumeration_corpus() if corpus is None else corpus
    randoms = random_hulls() if randoms is None else randoms
    pick_bad = blackbox_bad = 0
    for P in list(corpus) + list(randoms):
        a2 = area_twice(P)
        if a2 != pick_area_twice(P):
            pick_bad += 1
        if 4 * a2 < 3 * lattice_width(P).width ** 2:
            blackbox_bad += 1
    ok = pick_bad == 0 and blackbox_bad == 0
    return CriterionResult(6, "Pick and area lower bound", ok,
                           f"Pick violations {pick_bad}, area bound violations {blackbox_bad}")


def criterion_7() -> CriterionResult:
    problems = []
    for g in range(0, 21):
        for d in range(0, 2 * g - 1):
            for r in range(0, d + 1):
                h = DivisorHypothesis(g, d, r)
                if rho(serre_dual(h)) != rho(h):
                    problems.append(("dual", h))
    for g in range(0, 7):
        for d in range(0, 2 * g - 1):
            for r in range(1, d + 1):
                h = DivisorHypothesis(g, d, r)
                if rho(h) >= 0:
                    continue
                out = reduce_to_low_rank(h)
                top = 1 if g < 5 else 2
                if not (1 <= out.r <= top and rho(out) < 0 and out.g == g):
                    problems.append(("reduce", h, out))
    for g in range(1, 101):
        if min_degree_nonneg_rho(g, 1) != (g + 1) // 2 + 1:
            problems.append(("threshold", g))
    if rho(DivisorHypothesis(5, 4, 2)) != -4:
        problems.append(("worked value",))
    return CriterionResult(7, "rho arithmetic", not problems, f"{len(problems)} problems")


def criterion_8() -> CriterionResult:
    problems = []
    for d in range(3, 13):
        if profile(simplex(d)).genus_if_smooth != (d - 1) * (d - 2) // 2:
            problems.append(d)
    quintic_interior = interior_polygon(simplex(5))
    if not equivalent(quintic_interior, simplex(2)):
        problems.append("interior of 5-simplex")
    two_sigma = [v for v in classify_interior_polygons(6) if equivalent(v.polygon_class.representative, simplex(2))]
    if len(two_sigma) != 1 or two_sigma[0].reason != PLANE_QUINTIC:
        problems.append("2-simplex verdict")
    return CriterionResult(8, "plane-curve consistency", not problems, f"problems: {problems}")


def criterion_9() -> CriterionResult:
    problems = []
    for n in range(1, 6):
        if naive_by_lattice_points(n) != {c.representative for c in enumerate_by_lattice_points(n)}:
            problems.append(f"points={n}")
    if naive_by_interior_points(1) != {c.representative for c in enumerate_by_interior_points(1)}:
        problems.append("interior=1")
    checked = 0
    for n in range(1, 7):
        for c in enumerate_by_lattice_points(n):
            P = c.representative
            if not P.is_full:
                continue
            checked += 1
            witness = brute_force_interior_witness(P)
            if realizable_as_interior(P) != (witness is not None):
                problems.append(f"realizability {P}")
    return CriterionResult(9, "enumerator cross-validation", not problems,
                           f"{checked} realizability checks; problems: {problems}")


def criterion_10() -> CriterionResult:
    runs = []
    for threads in (1, 1, 4):
        clear_caches()
        runs.append((build_outputs(threads=threads), enumeration_jsonl(interior=10, threads=threads)))
    same = all(r == runs[0] for r in runs)
    return CriterionResult(10, "determinism", same, "classify and enumerate output identical across 3 runs (threads 1, 1, 4)")


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_all(only=None) -> list[CriterionResult]:
    return [CRITERIA[k]() for k in sorted(CRITERIA) if only is None or k in only]
