"""Structural graphs, 4-cycle enumeration, ribbons and separation queries.

A ribbon is an equivalence class of edges under the reflexive-transitive
closure of "opposite edges of a 4-cycle".  Ribbons generalize the rows and
columns of a rectangular grid and drive everything else in the package:
edge-cut classification, separation queries, bracing graphs and rigidity.

All types are immutable after construction and all operations are pure, so
concurrent readers need no synchronization.  Vertex ids are opaque strings
ordered lexicographically; every deterministic tie-break in the package uses
that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    EdgeNotFound,
    RibbonNotSimpleCut,
    SelfLoop,
    UnknownVertex,
)

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True, order=True)
class FourCycle:
    """A 4-cycle subgraph in canonical form.

    ``vertices`` lists the cycle in cyclic order, rotated/reflected so the
    smallest vertex comes first and its smaller cycle-neighbor second.  The
    canonical form is unique per 4-cycle, which makes deduplication and
    deterministic output trivial.
    """

    vertices: tuple[str, str, str, str]

    @classmethod
    def from_cycle(cls, quad: Sequence[str]) -> "FourCycle":
        a, b, c, d = quad
        if len({a, b, c, d}) != 4:
            raise ValueError(f"4-cycle vertices must be distinct: {quad!r}")
        forward = (a, b, c, d)
        backward = (a, d, c, b)
        best = min(
            tuple(ring[i:] + ring[:i])
            for ring in (forward, backward)
            for i in range(4)
        )
        return cls(best)

    def boundary_edges(self) -> tuple[Edge, Edge, Edge, Edge]:
        a, b, c, d = self.vertices
        return (edge_key(a, b), edge_key(b, c), edge_key(c, d), edge_key(d, a))

    def opposite_edge_pairs(self) -> tuple[tuple[Edge, Edge], tuple[Edge, Edge]]:
        a, b, c, d = self.vertices
        return (
            (edge_key(a, b), edge_key(c, d)),
            (edge_key(b, c), edge_key(d, a)),
        )

    def diagonals(self) -> tuple[Edge, Edge]:
        a, b, c, d = self.vertices
        return (edge_key(a, c), edge_key(b, d))


class StructuralGraph:
    """A connected simple graph over string vertex ids.

    ``vertices`` and ``edges`` are sorted tuples; ``four_cycles`` is computed
    lazily and cached.  Instances are immutable.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]]):
        ordered: list[str] = []
        seen: set[str] = set()
        for v in vertices:
            if not isinstance(v, str):
                raise UnknownVertex(f"vertex ids must be strings, got {v!r}")
            if v not in seen:
                seen.add(v)
                ordered.append(v)
        if not ordered:
            raise DisconnectedGraph("graph needs at least one vertex")
        self.vertices: tuple[str, ...] = tuple(sorted(ordered))

        canon: list[Edge] = []
        edge_set: set[Edge] = set()
        for u, v in edges:
            if u not in seen or v not in seen:
                raise UnknownVertex(f"edge ({u!r}, {v!r}) references unknown vertex")
            if u == v:
                raise SelfLoop(f"self-loop at {u!r}")
            e = edge_key(u, v)
            if e in edge_set:
                raise DuplicateEdge(f"duplicate edge {e!r}")
            edge_set.add(e)
            canon.append(e)
        self.edges: tuple[Edge, ...] = tuple(sorted(edge_set))

        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adjacency: dict[str, frozenset[str]] = {
            v: frozenset(ns) for v, ns in adj.items()
        }

        self._check_connected()

    def _check_connected(self) -> None:
        start = self.vertices[0]
        stack = [start]
        reached = {start}
        while stack:
            for n in self._adjacency[stack.pop()]:
                if n not in reached:
                    reached.add(n)
                    stack.append(n)
        if len(reached) != len(self.vertices):
            missing = sorted(set(self.vertices) - reached)
            raise DisconnectedGraph(f"graph is disconnected; unreachable: {missing}")

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adjacency[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def four_cycles(self) -> tuple[FourCycle, ...]:
        return enumerate_four_cycles(self)

    @cached_property
    def triangles(self) -> tuple[tuple[str, str, str], ...]:
        """All 3-cycles, sorted.  P-frameworks must not have any."""
        found = []
        for u, v in self.edges:
            for w in sorted(self._adjacency[u] & self._adjacency[v]):
                if u < w and v < w:
                    found.append((u, v, w))
        return tuple(sorted(found))

    def __repr__(self) -> str:
        return f"StructuralGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


def build_structural_graph(vertices: Iterable[str],
                           edges: Iterable[tuple[str, str]]) -> StructuralGraph:
    """Validate and build a connected structural graph."""
    return StructuralGraph(vertices, edges)


def enumerate_four_cycles(g: StructuralGraph) -> tuple[FourCycle, ...]:
    """All distinct 4-cycle subgraphs, canonical and sorted.

    For each vertex pair {u, v} the common neighbors are paired; every pair
    {x, y} of common neighbors yields the cycle u-x-v-y.  Each cycle is found
    through both of its diagonals and deduplicated by canonical form.
    """
    cycles: set[FourCycle] = set()
    for u, v in combinations(g.vertices, 2):
        common = sorted(g.neighbors(u) & g.neighbors(v))
        for x, y in combinations(common, 2):
            cycles.add(FourCycle.from_cycle((u, x, v, y)))
    return tuple(sorted(cycles))


@dataclass(frozen=True)
class Ribbon:
    """One edge equivalence class plus its precomputed classification.

    ``components`` are the connected components of the graph after removing
    the ribbon's edges, each a frozenset of vertex ids, ordered by smallest
    member.  The ribbon is an edge cut exactly when there are at least two.
    """

    id: int
    edges: tuple[Edge, ...]
    is_simple: bool
    components: tuple[frozenset[str], ...]

    @property
    def is_edge_cut(self) -> bool:
        return len(self.components) >= 2

    @property
    def sides(self) -> tuple[frozenset[str], ...]:
        return self.components

    def side_of(self, v: str) -> int:
        for i, comp in enumerate(self.components):
            if v in comp:
                return i
        raise UnknownVertex(f"vertex {v!r} not covered by ribbon components")

    def separates(self, u: str, v: str) -> bool:
        return self.is_edge_cut and self.side_of(u) != self.side_of(v)


@dataclass(frozen=True)
class RibbonPartition:
    """Partition of the structural edges into ribbons."""

    ribbons: tuple[Ribbon, ...]
    ribbon_of: Mapping[Edge, int]

    def ribbon_of_edge(self, u: str, v: str) -> int:
        e = edge_key(u, v)
        try:
            return self.ribbon_of[e]
        except KeyError:
            raise EdgeNotFound(f"edge {e!r} is not a structural edge") from None

    def __len__(self) -> int:
        return len(self.ribbons)


class _UnionFind:
    """Union-find with path compression over hashable items."""

    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra

    def classes(self) -> list[list]:
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def _connected_components(vertices: Iterable[str],
                          adjacency: Mapping[str, Iterable[str]]) -> tuple[frozenset[str], ...]:
    remaining = set(vertices)
    comps = []
    while remaining:
        start = next(iter(remaining))
        stack = [start]
        comp = {start}
        while stack:
            for n in adjacency.get(stack.pop(), ()):
                if n in comp:
                    continue
                comp.add(n)
                stack.append(n)
        remaining -= comp
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


def _has_four_cycle(edges: Sequence[Edge]) -> bool:
    adj: dict[str, set[str]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    verts = sorted(adj)
    for u, v in combinations(verts, 2):
        if len(adj[u] & adj[v]) >= 2:
            return True
    return False


def _components_without(g: StructuralGraph, removed: Iterable[Edge]) -> tuple[frozenset[str], ...]:
    gone = set(removed)
    adj: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v in g.edges:
        if (u, v) not in gone:
            adj[u].append(v)
            adj[v].append(u)
    return _connected_components(g.vertices, adj)


def compute_ribbons(g: StructuralGraph) -> RibbonPartition:
    """Partition the edges into ribbons and classify each one.

    Opposite edges of every 4-cycle are merged with union-find; the closure of
    that relation is exactly the ribbon partition.  Ribbon ids are assigned in
    order of each class's lexicographically smallest edge, so recomputation is
    reproducible.
    """
    uf = _UnionFind(g.edges)
    for cycle in g.four_cycles:
        (e1, e3), (e2, e4) = cycle.opposite_edge_pairs()
        uf.union(e1, e3)
        uf.union(e2, e4)

    classes = sorted((sorted(c) for c in uf.classes()), key=lambda c: c[0])
    ribbons = []
    ribbon_of: dict[Edge, int] = {}
    for rid, edges in enumerate(classes):
        ribbon = Ribbon(
            id=rid,
            edges=tuple(edges),
            is_simple=not _has_four_cycle(edges),
            components=_components_without(g, edges),
        )
        ribbons.append(ribbon)
        for e in edges:
            ribbon_of[e] = rid
    return RibbonPartition(ribbons=tuple(ribbons), ribbon_of=ribbon_of)


@dataclass(frozen=True)
class CutResult:
    cut: bool
    components: tuple[frozenset[str], ...]


def is_edge_cut(g: StructuralGraph, ribbon: Ribbon) -> CutResult:
    """Components of the graph after removing the ribbon's edges."""
    comps = _components_without(g, ribbon.edges)
    return CutResult(cut=len(comps) >= 2, components=comps)


@dataclass(frozen=True)
class RibbonCuttingReport:
    ribbon_cutting: bool
    offending_ribbons: tuple[int, ...]


def classify_ribbon_cutting(g: StructuralGraph,
                            partition: Optional[RibbonPartition] = None) -> RibbonCuttingReport:
    """A graph is ribbon-cutting when every ribbon is an edge cut."""
    partition = partition or compute_ribbons(g)
    offending = tuple(r.id for r in partition.ribbons if not r.is_edge_cut)
    return RibbonCuttingReport(ribbon_cutting=not offending, offending_ribbons=offending)


@dataclass(frozen=True)
class Walk:
    """A walk given as its vertex sequence; vertices and edges may repeat.

    Edge traversals are counted as a multiset with orientation: an edge
    contributes once per step that uses it.
    """

    vertices: tuple[str, ...]

    @classmethod
    def through(cls, g: StructuralGraph, vertices: Sequence[str]) -> "Walk":
        vs = tuple(vertices)
        if not vs:
            raise ValueError("walk needs at least one vertex")
        for v in vs:
            if v not in g._adjacency:
                raise UnknownVertex(f"walk vertex {v!r} not in graph")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise EdgeNotFound(f"walk step ({a!r}, {b!r}) is not an edge")
        return cls(vs)

    def steps(self) -> Iterable[tuple[str, str]]:
        return zip(self.vertices, self.vertices[1:])

    @property
    def is_closed(self) -> bool:
        return len(self.vertices) >= 2 and self.vertices[0] == self.vertices[-1]


def walk_crossing_count(partition: RibbonPartition, walk: Walk, ribbon_id: int) -> int:
    """How many steps of the walk use an edge of the given ribbon (multiset count)."""
    edges = set(partition.ribbons[ribbon_id].edges)
    return sum(1 for a, b in walk.steps() if edge_key(a, b) in edges)


def walk_crossing_parity(g: StructuralGraph, partition: RibbonPartition,
                         walk: Walk | Sequence[str], ribbon_id: int) -> str:
    """Parity of ribbon crossings along a walk: ``"odd"`` iff the endpoints
    lie on different sides of the ribbon (requires a simple edge-cut ribbon).
    """
    ribbon = partition.ribbons[ribbon_id]
    if not (ribbon.is_simple and ribbon.is_edge_cut):
        raise RibbonNotSimpleCut(
            f"ribbon {ribbon_id} must be simple and an edge cut for parity queries")
    if not isinstance(walk, Walk):
        walk = Walk.through(g, walk)
    return "odd" if walk_crossing_count(partition, walk, ribbon_id) % 2 else "even"


def separating_ribbon(g: StructuralGraph, partition: RibbonPartition,
                      u: str, v: str,
                      exclude_edges: Iterable[tuple[str, str]] = ()) -> Optional[int]:
    """Smallest-id edge-cut ribbon with u and v on different sides, skipping
    ribbons that contain any excluded edge.  Returns None when no ribbon
    separates the pair; absence is a valid answer.
    """
    if u == v:
        raise ValueError("separation query needs two distinct vertices")
    excluded_ids = set()
    for a, b in exclude_edges:
        e = edge_key(a, b)
        if e in partition.ribbon_of:
            excluded_ids.add(partition.ribbon_of[e])
    for ribbon in partition.ribbons:
        if ribbon.id in excluded_ids or not ribbon.is_edge_cut:
            continue
        if ribbon.separates(u, v):
            return ribbon.id
    return None


def separation_witness(g: StructuralGraph,
                       partition: Optional[RibbonPartition] = None) -> Optional[tuple[str, str]]:
    """First vertex pair (lexicographic) that no ribbon separates, or None.

    P-frameworks separate every pair; a witness disqualifies the graph from
    the rigidity theory and is reported in refusals.
    """
    partition = partition or compute_ribbons(g)
    cut_ribbons = [r for r in partition.ribbons if r.is_edge_cut]
    side_maps = []
    for r in cut_ribbons:
        side = {}
        for i, comp in enumerate(r.components):
            for v in comp:
                side[v] = i
        side_maps.append(side)
    for u, v in combinations(g.vertices, 2):
        if not any(side[u] != side[v] for side in side_maps):
            return (u, v)
    return None
