from __future__ import annotations

import random

import pytest

from bracerig import instances
from bracerig.coloring import enumerate_cartesian_nac
from bracerig.errors import (
    BraceIsStructuralEdge,
    DuplicateBrace,
    NotADiagonal,
    SeparationViolated,
    UnknownVertex,
)
from bracerig.geometry import generate_grid, generate_random_grec
from bracerig.rigidity import (
    bracing_graph,
    build_braced,
    minimal_brace_completion,
    ribbon_graph,
    rigidity_verdict,
)


# --- build_braced -----------------------------------------------------------------

def test_brace_lands_in_both_crossing_ribbons():
    braced = build_braced(generate_grid(1, 1), [("v0_0", "v1_1")])
    brace = ("v0_0", "v1_1")
    holders = [rid for rid, edges in braced.braced_ribbons.items() if brace in edges]
    assert holders == [0, 1]


def test_structural_edge_rejected_as_brace():
    with pytest.raises(BraceIsStructuralEdge):
        build_braced(generate_grid(1, 1), [("v0_0", "v1_0")])


def test_non_diagonal_rejected():
    with pytest.raises(NotADiagonal):
        build_braced(generate_grid(2, 1), [("v0_0", "v2_1")])


def test_duplicate_brace_rejected():
    with pytest.raises(DuplicateBrace):
        build_braced(generate_grid(1, 1), [("v0_0", "v1_1"), ("v1_1", "v0_0")])


def test_unknown_vertex_rejected():
    with pytest.raises(UnknownVertex):
        build_braced(generate_grid(1, 1), [("v0_0", "zz")])


def test_mesh_quad_braces_extend_crossing_ribbons():
    braced = build_braced(*instances.mesh_quad_braced())
    for brace in braced.braces:
        holders = [rid for rid, edges in braced.braced_ribbons.items()
                   if brace in edges]
        assert len(holders) == 2


# --- ribbon graph / bracing graph ----------------------------------------------------

def test_hub_rigid_graphs():
    braced = build_braced(*instances.hub_mesh_rigid())
    full = ribbon_graph(braced)
    assert len(full.vertices) == 4
    assert len(full.edges) == 5
    sub = bracing_graph(braced)
    assert len(sub.edges) == 3
    assert len(sub.components()) == 1


def test_hub_flexible_graphs():
    braced = build_braced(*instances.hub_mesh_flexible())
    full = ribbon_graph(braced)
    assert len(full.vertices) == 6
    assert len(full.edges) == 6
    sub = bracing_graph(braced)
    assert len(sub.edges) == 3
    assert len(sub.components()) == 3


def test_unbraced_grid_bracing_graph_isolated():
    braced = build_braced(generate_grid(3, 3), [])
    sub = bracing_graph(braced)
    assert len(sub.vertices) == 6
    assert sub.edges == ()
    assert len(sub.components()) == 6


def test_bracing_edges_subset_of_ribbon_edges(corpus):
    for name, braced in corpus:
        full = set(ribbon_graph(braced).edges)
        sub = bracing_graph(braced)
        assert set(sub.edges) <= full, name
        for key, witnesses in sub.edge_witnesses.items():
            assert witnesses, (name, key)
            assert all(braced.is_cell_braced(c) for c in witnesses), (name, key)


def test_ribbon_graph_loop_free_on_corpus(corpus):
    for name, braced in corpus:
        for i, j in ribbon_graph(braced).edges:
            assert i != j, name


# --- verdicts --------------------------------------------------------------------------

def test_grid3x3_rigid_verdict():
    braced = build_braced(*instances.grid3x3_rigid())
    verdict = rigidity_verdict(braced)
    assert verdict.status == "Rigid"
    assert verdict.cartesian_nac_count == 0
    assert verdict.min_braces_possible == 5


def test_grid3x3_flexible_verdict():
    braced = build_braced(*instances.grid3x3_flexible())
    verdict = rigidity_verdict(braced)
    assert verdict.status == "Flexible"
    assert len(verdict.bracing_components) == 2


def test_unbraced_c4_verdict():
    braced = build_braced(generate_grid(1, 1), [])
    verdict = rigidity_verdict(braced)
    assert verdict.status == "Flexible"
    assert verdict.unbraced
    assert len(verdict.bracing_components) == 2
    assert verdict.cartesian_nac_count == 2


def test_verdict_refused_on_non_cutting_graph():
    braced = build_braced(instances.grid_gap(), [])
    with pytest.raises(SeparationViolated) as err:
        rigidity_verdict(braced)
    assert len(err.value.offending_ribbons) == 6


def test_verdict_matches_enumeration(corpus):
    for name, braced in corpus:
        if not braced.pframework.is_ribbon_cutting:
            continue
        verdict = rigidity_verdict(braced)
        count = sum(1 for _ in enumerate_cartesian_nac(braced))
        assert count == verdict.cartesian_nac_count, name
        assert (verdict.status == "Rigid") == (count == 0), name


def test_verdict_monotone_under_brace_addition():
    rng = random.Random(0)
    pf = generate_grid(3, 3)
    cells = [(i, j) for i in range(3) for j in range(3)]
    rng.shuffle(cells)
    braces = []
    previous_components = None
    for i, j in cells:
        braces.append((f"v{i}_{j}", f"v{i+1}_{j+1}"))
        verdict = rigidity_verdict(build_braced(pf, braces))
        count = len(verdict.bracing_components)
        if previous_components is not None:
            assert count <= previous_components
        previous_components = count
    assert previous_components == 1


# --- completion -------------------------------------------------------------------------

def test_unbraced_3x3_needs_five_braces():
    braced = build_braced(generate_grid(3, 3), [])
    result = minimal_brace_completion(braced)
    assert result.feasible
    assert len(result.added_braces) == 5
    completed = build_braced(generate_grid(3, 3), result.added_braces)
    assert rigidity_verdict(completed).status == "Rigid"


def test_flexible_grid_needs_one_brace():
    pf, braces = instances.grid3x3_flexible()
    result = minimal_brace_completion(build_braced(pf, braces))
    assert len(result.added_braces) == 1
    completed = build_braced(pf, braces + result.added_braces)
    assert rigidity_verdict(completed).status == "Rigid"


def test_already_rigid_needs_nothing():
    braced = build_braced(*instances.grid3x3_rigid())
    result = minimal_brace_completion(braced)
    assert result.feasible and result.added_braces == ()


def test_completion_deterministic():
    braced = build_braced(generate_grid(4, 2), [])
    first = minimal_brace_completion(braced)
    second = minimal_brace_completion(braced)
    assert first.added_braces == second.added_braces


def test_completion_size_and_rigidity_on_corpus(corpus):
    for name, braced in corpus:
        if not braced.pframework.is_ribbon_cutting or \
                braced.pframework.unseparated_pair is not None:
            continue
        components = len(bracing_graph(braced).components())
        result = minimal_brace_completion(braced)
        if result.feasible:
            assert len(result.added_braces) == components - 1, name
            completed = build_braced(braced.pframework,
                                     braced.braces + result.added_braces)
            assert rigidity_verdict(completed).status == "Rigid", name


def test_completion_on_random_grown_frameworks():
    for seed in range(5):
        pf = generate_random_grec(10, seed=seed)
        braced = build_braced(pf, [])
        result = minimal_brace_completion(braced)
        assert result.feasible
        completed = build_braced(pf, result.added_braces)
        assert rigidity_verdict(completed).status == "Rigid"
