"""Braced frameworks, ribbon/bracing graphs, rigidity verdicts and completion.

A brace is a diagonal added across a structural 4-cycle; it freezes that
cell's shape.  Ribbons become vertices of the *ribbon graph* (adjacent when
two ribbons share a cell) and of its *bracing subgraph* (keeping only
adjacencies witnessed by a braced cell).  For frameworks inside the theory's
hypotheses, rigidity is equivalent to the bracing graph being connected, and
the number of cartesian NAC-colorings is 2^c - 2 for c bracing components.
Verdicts refuse, rather than guess, on frameworks that fail the hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BraceIsStructuralEdge,
    DuplicateBrace,
    NotADiagonal,
    UnknownVertex,
)
from .geometry import PFramework
from .graph import Edge, FourCycle, _UnionFind, edge_key

Brace = Edge


class BracedFramework:
    """A framework plus a set of cell diagonals (braces).

    ``braced_ribbons`` maps each ribbon id to its edges extended by every
    brace whose witnessing cell has an opposite-edge pair inside the ribbon;
    each brace therefore lands in both ribbons crossing at its cell.  An empty
    brace set is allowed (it is the natural starting state for completion and
    interactive use) and flagged via :attr:`unbraced`.
    """

    def __init__(self, pframework: PFramework, braces: Iterable[tuple[str, str]]):
        self.pframework = pframework
        graph = pframework.graph

        canon: list[Brace] = []
        seen: set[Brace] = set()
        for u, v in braces:
            if u not in graph._adjacency or v not in graph._adjacency:
                raise UnknownVertex(f"brace ({u!r}, {v!r}) references unknown vertex")
            b = edge_key(u, v)
            if b in graph._edge_set:
                raise BraceIsStructuralEdge(f"{b!r} is a structural edge, not a brace")
            if b in seen:
                raise DuplicateBrace(f"duplicate brace {b!r}")
            seen.add(b)
            canon.append(b)
        self.braces: tuple[Brace, ...] = tuple(sorted(seen))

        witnesses: dict[Brace, list[FourCycle]] = {b: [] for b in self.braces}
        for cycle in graph.four_cycles:
            for diagonal in cycle.diagonals():
                if diagonal in witnesses:
                    witnesses[diagonal].append(cycle)
        for b, cycles in witnesses.items():
            if not cycles:
                raise NotADiagonal(f"{b!r} is not the diagonal of any 4-cycle")
        self.brace_witnesses: dict[Brace, tuple[FourCycle, ...]] = {
            b: tuple(cycles) for b, cycles in witnesses.items()
        }

        partition = pframework.partition
        braced: dict[int, set[Edge]] = {
            r.id: set(r.edges) for r in partition.ribbons
        }
        for b, cycles in self.brace_witnesses.items():
            for cycle in cycles:
                for pair in cycle.opposite_edge_pairs():
                    braced[partition.ribbon_of[pair[0]]].add(b)
        self.braced_ribbons: dict[int, tuple[Edge, ...]] = {
            rid: tuple(sorted(edges)) for rid, edges in braced.items()
        }

    @property
    def unbraced(self) -> bool:
        return not self.braces

    @cached_property
    def all_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.pframework.graph.edges + self.braces))

    def is_cell_braced(self, cycle: FourCycle) -> bool:
        d1, d2 = cycle.diagonals()
        return d1 in self.brace_witnesses or d2 in self.brace_witnesses

    def __repr__(self) -> str:
        return f"BracedFramework({self.pframework!r}, {len(self.braces)} braces)"


def build_braced(pframework: PFramework,
                 braces: Iterable[tuple[str, str]]) -> BracedFramework:
    """Validate braces against the framework and index the braced ribbons."""
    return BracedFramework(pframework, braces)


@dataclass(frozen=True)
class RibbonAdjacencyGraph:
    """Graph on ribbon ids; each edge carries its witnessing 4-cycles."""

    vertices: tuple[int, ...]
    edge_witnesses: Mapping[tuple[int, int], tuple[FourCycle, ...]]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_witnesses))

    def components(self) -> tuple[tuple[int, ...], ...]:
        uf = _UnionFind(self.vertices)
        for i, j in self.edge_witnesses:
            uf.union(i, j)
        groups = sorted((tuple(sorted(c)) for c in uf.classes()), key=lambda c: c[0])
        return tuple(groups)


def _adjacency_witnesses(braced: BracedFramework,
                         braced_only: bool) -> dict[tuple[int, int], tuple[FourCycle, ...]]:
    partition = braced.pframework.partition
    found: dict[tuple[int, int], list[FourCycle]] = {}
    for cycle in braced.pframework.graph.four_cycles:
        if braced_only and not braced.is_cell_braced(cycle):
            continue
        pair1, pair2 = cycle.opposite_edge_pairs()
        r1 = partition.ribbon_of[pair1[0]]
        r2 = partition.ribbon_of[pair2[0]]
        if r1 == r2:
            continue  # loop; only possible for non-simple ribbons
        key = (min(r1, r2), max(r1, r2))
        found.setdefault(key, []).append(cycle)
    return {key: tuple(sorted(cycles)) for key, cycles in sorted(found.items())}


def ribbon_graph(braced: BracedFramework) -> RibbonAdjacencyGraph:
    """Two ribbons are adjacent iff they share a 4-cycle."""
    return RibbonAdjacencyGraph(
        vertices=tuple(r.id for r in braced.pframework.partition.ribbons),
        edge_witnesses=_adjacency_witnesses(braced, braced_only=False),
    )


def bracing_graph(braced: BracedFramework) -> RibbonAdjacencyGraph:
    """Subgraph of the ribbon graph keeping adjacencies with a braced witness
    cell.  Ribbons without braces stay as isolated vertices."""
    return RibbonAdjacencyGraph(
        vertices=tuple(r.id for r in braced.pframework.partition.ribbons),
        edge_witnesses=_adjacency_witnesses(braced, braced_only=True),
    )


@dataclass(frozen=True)
class Verdict:
    status: str  # "Rigid" | "Flexible"
    bracing_components: tuple[tuple[int, ...], ...]
    cartesian_nac_count: int
    min_braces_possible: int
    unbraced: bool

    @property
    def rigid(self) -> bool:
        return self.status == "Rigid"


def rigidity_verdict(braced: BracedFramework) -> Verdict:
    """Decide rigidity from bracing-graph connectivity.

    Refuses (SeparationViolated) when the graph is not ribbon-cutting or some
    vertex pair is not ribbon-separated: outside those hypotheses connectivity
    of the bracing graph decides nothing.
    """
    braced.pframework.require_theory_preconditions()
    components = bracing_graph(braced).components()
    c = len(components)
    return Verdict(
        status="Rigid" if c == 1 else "Flexible",
        bracing_components=components,
        cartesian_nac_count=2 ** c - 2,
        min_braces_possible=len(braced.pframework.partition.ribbons) - 1,
        unbraced=braced.unbraced,
    )


@dataclass(frozen=True)
class CompletionResult:
    added_braces: tuple[Brace, ...]
    infeasible_reason: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return self.infeasible_reason is None


def _cheapest_brace(braced: BracedFramework,
                    witnesses: Sequence[FourCycle]) -> Optional[Brace]:
    """Lexicographically smallest admissible diagonal among the witness cells."""
    graph = braced.pframework.graph
    existing = set(braced.braces)
    options = []
    for cycle in witnesses:
        for diagonal in cycle.diagonals():
            if diagonal in existing or diagonal in graph._edge_set:
                continue
            options.append(diagonal)
    return min(options) if options else None


def minimal_brace_completion(braced: BracedFramework) -> CompletionResult:
    """A minimum set of new braces that makes the bracing graph connected.

    Treats the bracing components as nodes of a quotient graph whose candidate
    links are the unbraced ribbon adjacencies; a spanning tree of the quotient
    realizes each chosen link by bracing one witness cell.  Deterministic:
    links are scanned in (ribbon id, ribbon id) order and each link uses the
    lexicographically smallest diagonal.  Infeasible only when the quotient
    itself is disconnected.
    """
    full = ribbon_graph(braced)
    components = bracing_graph(braced).components()
    if len(components) <= 1:
        return CompletionResult(added_braces=())

    comp_of: dict[int, int] = {}
    for idx, comp in enumerate(components):
        for rid in comp:
            comp_of[rid] = idx

    uf = _UnionFind(range(len(components)))
    added: list[Brace] = []
    for (r1, r2), witnesses in sorted(full.edge_witnesses.items()):
        c1, c2 = comp_of[r1], comp_of[r2]
        if uf.find(c1) == uf.find(c2):
            continue
        brace = _cheapest_brace(braced, witnesses)
        if brace is None:
            continue
        uf.union(c1, c2)
        added.append(brace)

    if len({uf.find(i) for i in range(len(components))}) > 1:
        return CompletionResult(
            added_braces=(),
            infeasible_reason="ribbon graph does not connect the bracing components",
        )
    return CompletionResult(added_braces=tuple(added))
