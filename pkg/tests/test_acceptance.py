"""Acceptance suite: one test per criterion, printing one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

from __future__ import annotations

import math
import random
import time
from itertools import combinations

from bracerig import instances
from bracerig.coloring import (
    brute_force_nac_oracle,
    check_cartesian,
    enumerate_cartesian_nac,
    product_embedding,
)
from bracerig.errors import SeparationViolated
from bracerig.flexes import build_flex, verify_flex
from bracerig.geometry import (
    close_four_cycle,
    close_four_cycle_precondition,
    generate_grid,
    generate_random_grec,
    vec_add,
    vec_sub,
)
from bracerig.graph import (
    classify_ribbon_cutting,
    compute_ribbons,
    edge_key,
    separation_witness,
    walk_crossing_parity,
)
from bracerig.rigidity import (
    bracing_graph,
    build_braced,
    minimal_brace_completion,
    rigidity_verdict,
)
from conftest import braced_corpus
from oracles import random_walk


class Criterion:
    def __init__(self, number: int, title: str, budget_seconds: float | None = None):
        self.number = number
        self.title = title
        self.budget = budget_seconds
        self.failures: list[str] = []
        self.started = time.perf_counter()

    def check(self, condition: bool, label: str) -> None:
        if not condition:
            self.failures.append(label)

    def finish(self) -> None:
        elapsed = time.perf_counter() - self.started
        if self.budget is not None and elapsed > self.budget:
            self.failures.append(f"runtime {elapsed:.2f}s exceeds {self.budget:.0f}s budget")
        status = "PASS" if not self.failures else "FAIL"
        line = f"CRITERION {self.number} [{status}] {self.title} ({elapsed:.2f}s)"
        if self.failures:
            line += " :: " + "; ".join(self.failures)
        print(line)
        assert not self.failures, line


def test_criterion_1_figure_reproduction():
    crit = Criterion(1, "figure corpus reproduction", budget_seconds=1.0)

    strip = instances.strip_flap()
    crit.check(len(strip.partition.ribbons) == 5, "strip-flap ribbon count")

    fan = instances.fan6()
    crit.check(len(fan.partition.ribbons) == 6, "fan ribbon count")

    inner = instances.square_with_inner_path()
    part = compute_ribbons(inner)
    crit.check(len(part.ribbons) == 1 and not part.ribbons[0].is_simple,
               "inner-path single non-simple ribbon")

    ring = instances.pinched_ring()
    ring_part = compute_ribbons(ring)
    crit.check(classify_ribbon_cutting(ring, ring_part).ribbon_cutting,
               "pinched ring ribbon-cutting")
    crit.check(separation_witness(ring, ring_part) is not None,
               "pinched ring separation failure")

    gap = instances.grid_gap()
    gap_report = classify_ribbon_cutting(gap.graph, gap.partition)
    crit.check(not gap_report.ribbon_cutting, "grid gap not ribbon-cutting")
    refused = False
    try:
        rigidity_verdict(build_braced(gap, []))
    except SeparationViolated:
        refused = True
    crit.check(refused, "grid gap verdict refused")
    crit.check(
        len(gap_report.offending_ribbons) == 2,
        f"grid gap non-cut ribbon count (expected 2, measured "
        f"{len(gap_report.offending_ribbons)})")

    hub_rigid = build_braced(*instances.hub_mesh_rigid())
    crit.check(len(bracing_graph(hub_rigid).components()) == 1
               and rigidity_verdict(hub_rigid).status == "Rigid",
               "hub mesh connected bracing graph")

    hub_flex = build_braced(*instances.hub_mesh_flexible())
    verdict = rigidity_verdict(hub_flex)
    crit.check(len(verdict.bracing_components) == 3 and verdict.status == "Flexible",
               "hub mesh three bracing components")

    crit.finish()


def test_criterion_2_grid_bracings():
    crit = Criterion(2, "3x3 grid bracing verdicts and one-brace repair",
                     budget_seconds=1.0)

    left = build_braced(*instances.grid3x3_rigid())
    crit.check(rigidity_verdict(left).status == "Rigid", "left bracing rigid")

    pf, braces = instances.grid3x3_flexible()
    right = build_braced(pf, braces)
    crit.check(rigidity_verdict(right).status == "Flexible", "right bracing flexible")

    completion = minimal_brace_completion(right)
    crit.check(len(completion.added_braces) == 1, "completion adds one brace")
    repaired = build_braced(pf, braces + completion.added_braces)
    crit.check(rigidity_verdict(repaired).status == "Rigid", "repaired grid rigid")

    crit.finish()


def _random_braced_frameworks(count: int, rng: random.Random):
    made = 0
    seed = 0
    while made < count:
        seed += 1
        steps = rng.randint(4, 17)
        pf = generate_random_grec(steps, seed=seed)
        if len(pf.graph.vertices) > 40:
            continue
        density = rng.choice((0.3, 0.5, 0.8, 1.0))
        diagonals = sorted({
            rng.choice(cycle.diagonals())
            for cycle in pf.graph.four_cycles if rng.random() < density
        })
        braces = [d for d in diagonals if d not in pf.graph._edge_set]
        yield build_braced(pf, braces)
        made += 1


def test_criterion_3_equivalence_suite():
    crit = Criterion(3, "verdict/coloring/flex equivalence on 200 random frameworks",
                     budget_seconds=30.0)
    rng = random.Random(2024)
    flexible_seen = 0
    for braced in _random_braced_frameworks(200, rng):
        connected = len(bracing_graph(braced).components()) == 1
        colorings = list(enumerate_cartesian_nac(braced))
        if connected != (len(colorings) == 0):
            crit.check(False, "bracing connectivity vs enumeration emptiness")
            break
        if colorings:
            flexible_seen += 1
            status = check_cartesian(braced.all_edges, colorings[0])
            if not status.is_cartesian:
                crit.check(False, "enumerated coloring fails independent check")
                break
            flex = build_flex(braced, colorings[0])
            report = verify_flex(flex, sample_count=100, tol=1e-9)
            if not report.nontrivial:
                crit.check(False, "flex not non-trivial")
                break
            if report.max_length_drift > 1e-9:
                crit.check(False, "length drift above 1e-9")
                break
    crit.check(flexible_seen >= 20, f"enough flexible instances ({flexible_seen})")
    crit.finish()


def test_criterion_4_oracle_suite():
    crit = Criterion(4, "enumeration equals brute force on small braced corpus")

    c4 = generate_grid(1, 1)
    crit.check(len(brute_force_nac_oracle(c4.graph.edges)) == 6,
               "plain cell has six NAC-colorings")
    crit.check(len(brute_force_nac_oracle(c4.graph.edges, cartesian_only=True)) == 2,
               "plain cell has two cartesian colorings")

    small = [
        ("c4", build_braced(c4, [])),
        ("c4_braced", build_braced(c4, [("v0_0", "v1_1")])),
        ("grid2x1", build_braced(generate_grid(2, 1), [])),
        ("grid2x1_braced", build_braced(generate_grid(2, 1), [("v0_0", "v1_1")])),
        ("grid2x2", build_braced(generate_grid(2, 2), [])),
        ("grid2x2_braced", build_braced(generate_grid(2, 2),
                                        [("v0_0", "v1_1"), ("v1_1", "v2_2")])),
        ("strip_flap", build_braced(instances.strip_flap(), [])),
        ("strip_flap_braced", build_braced(instances.strip_flap(), [("a", "c")])),
    ]
    for name, braced in small:
        fast = set(enumerate_cartesian_nac(braced))
        slow = set(brute_force_nac_oracle(braced.all_edges, cartesian_only=True))
        crit.check(fast == slow, f"{name}: enumeration equals oracle")
        c = len(bracing_graph(braced).components())
        crit.check(len(fast) == 2 ** c - 2, f"{name}: count equals 2^c-2")

    crit.finish()


def test_criterion_5_minimum_braces():
    crit = Criterion(5, "unbraced grids need one brace less than ribbons",
                     budget_seconds=1.0)
    for a in range(1, 5):
        for b in range(1, 5):
            pf = generate_grid(a, b)
            result = minimal_brace_completion(build_braced(pf, []))
            crit.check(len(result.added_braces) == a + b - 1,
                       f"{a}x{b}: {a + b - 1} braces")
            verdict = rigidity_verdict(build_braced(pf, result.added_braces))
            crit.check(verdict.status == "Rigid", f"{a}x{b}: completed rigid")
    crit.finish()


def test_criterion_6_structural_invariants():
    crit = Criterion(6, "structural invariant suite over the corpus")
    rng = random.Random(99)
    for name, braced in braced_corpus():
        pf = braced.pframework
        g, part = pf.graph, pf.partition

        for ribbon in part.ribbons:
            if ribbon.is_simple and ribbon.is_edge_cut:
                crit.check(len(ribbon.components) == 2,
                           f"{name}: two components per simple cut ribbon")

        adjacency = {v: g.neighbors(v) for v in g.vertices}
        for _ in range(4):
            out = random_walk(rng, adjacency, rng.choice(g.vertices), 7)
            closed = out + list(reversed(out))[1:]
            for ribbon in part.ribbons:
                if not (ribbon.is_simple and ribbon.is_edge_cut):
                    continue
                crit.check(
                    walk_crossing_parity(g, part, closed, ribbon.id) == "even",
                    f"{name}: closed walk parity")

        for _ in range(4):
            walk = random_walk(rng, adjacency, rng.choice(g.vertices), 9)
            for ribbon in part.ribbons:
                if not (ribbon.is_simple and ribbon.is_edge_cut):
                    continue
                edges = set(ribbon.edges)
                total = (0.0, 0.0)
                crossings = 0
                for x, y in zip(walk, walk[1:]):
                    if edge_key(x, y) in edges:
                        total = vec_add(total, vec_sub(pf.placement.point(y),
                                                       pf.placement.point(x)))
                        crossings += 1
                if crossings % 2 == 0:
                    crit.check(math.hypot(*total) <= 1e-9,
                               f"{name}: even-crossing vector sum")

        if pf.is_ribbon_cutting and len(g.vertices) <= 40:
            crit.check(g.triangles == (), f"{name}: no 3-cycles")
            crit.check(pf.unseparated_pair is None, f"{name}: pairwise separation")

        if pf.is_ribbon_cutting:
            for coloring in enumerate_cartesian_nac(braced):
                emb = product_embedding(braced.all_edges, coloring)
                crit.check(len(set(emb.h.values())) == len(g.vertices),
                           f"{name}: embedding injective")

    crit.finish()


def test_criterion_7_close_cycle_equivalence():
    crit = Criterion(7, "close-four-cycle succeeds exactly when separation holds")
    scanned = 0
    blocked_seen = 0
    for name, braced in braced_corpus():
        pf = braced.pframework
        if len(pf.graph.vertices) > 20 or not pf.is_ribbon_cutting:
            continue
        for v in pf.graph.vertices:
            for u, w in combinations(sorted(pf.graph.neighbors(v)), 2):
                edge_uv, edge_vw = (u, v), (v, w)
                blocked = close_four_cycle_precondition(pf, edge_uv, edge_vw)
                scanned += 1
                if blocked:
                    blocked_seen += 1
                    try:
                        close_four_cycle(pf, edge_uv, edge_vw)
                        crit.check(False, f"{name}: close succeeded despite {blocked}")
                    except SeparationViolated:
                        pass
                    target = vec_add(pf.placement.point(u),
                                     vec_sub(pf.placement.point(w),
                                             pf.placement.point(v)))
                    for x in blocked:
                        crit.check(
                            math.hypot(*vec_sub(pf.placement.point(x), target)) <= 1e-9,
                            f"{name}: blocking vertex at forced position")
                else:
                    closed = close_four_cycle(pf, edge_uv, edge_vw)
                    crit.check(closed.is_ribbon_cutting,
                               f"{name}: closed framework ribbon-cutting")
    crit.check(scanned >= 200, f"scan coverage ({scanned} corner pairs)")
    crit.check(blocked_seen >= 5, f"blocked cases seen ({blocked_seen})")
    crit.finish()
