"""Red/blue edge colorings: NAC checks, enumeration, products and embeddings.

A NAC-coloring is a surjective two-coloring in which every cycle is either
monochromatic or carries at least two edges of each color; it is *cartesian*
when no vertex pair is joined by both a red and a blue path.  For braced
frameworks whose every ribbon is an edge cut and whose vertex pairs are all
ribbon-separated, the cartesian NAC-colorings are exactly the surjective
two-colorings of the bracing graph's connected components, which is what the
fast enumerator exploits; a brute-force oracle over all 2^|E| colorings backs
it in tests.

Vertex ids only need to be hashable and mutually sortable here, so the same
functions serve structural graphs (string ids) and cartesian products (tuple
ids).
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import (
    NotCartesian,
    PartialColoring,
    PreconditionUnverified,
    TooLarge,
    TrivialFactor,
)

RED = "red"
BLUE = "blue"

V = Hashable
E = tuple  # canonical (sorted) vertex pair


def _edge(u, v) -> E:
    return (u, v) if u <= v else (v, u)


def _canonical_edges(edges: Iterable[Sequence]) -> tuple[E, ...]:
    return tuple(sorted(_edge(u, v) for u, v in edges))


def _components(vertices: Iterable[V], edges: Iterable[E]) -> tuple[frozenset, ...]:
    adj: dict[V, list[V]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    remaining = set(adj)
    comps = []
    while remaining:
        start = next(iter(remaining))
        comp = {start}
        stack = [start]
        while stack:
            for n in adj[stack.pop()]:
                if n not in comp:
                    comp.add(n)
                    stack.append(n)
        remaining -= comp
        comps.append(frozenset(comp))
    return tuple(sorted(comps, key=min))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total red/blue assignment on an edge set, with component caches.

    Equality and hashing go by the color map alone, so enumeration output can
    be compared set-wise against the brute-force oracle.
    """

    color_of: Mapping[E, str]
    vertices: tuple = ()

    @classmethod
    def over(cls, edges: Iterable[Sequence], colors: Mapping, *,
             vertices: Iterable[V] = ()) -> "EdgeColoring":
        canon = _canonical_edges(edges)
        mapping = {}
        for e in canon:
            color = colors.get(e, colors.get((e[1], e[0])))
            if color not in (RED, BLUE):
                raise PartialColoring(f"edge {e!r} has no red/blue color")
            mapping[e] = color
        vertex_set = set(vertices)
        for u, v in canon:
            vertex_set.add(u)
            vertex_set.add(v)
        return cls(color_of=mapping, vertices=tuple(sorted(vertex_set)))

    def edges_of(self, color: str) -> tuple[E, ...]:
        return tuple(e for e in sorted(self.color_of) if self.color_of[e] == color)

    @cached_property
    def red_components(self) -> tuple[frozenset, ...]:
        return _components(self.vertices, self.edges_of(RED))

    @cached_property
    def blue_components(self) -> tuple[frozenset, ...]:
        return _components(self.vertices, self.edges_of(BLUE))

    def component_of(self, v: V, color: str) -> frozenset:
        comps = self.red_components if color == RED else self.blue_components
        for comp in comps:
            if v in comp:
                return comp
        raise KeyError(v)

    def swapped(self) -> "EdgeColoring":
        flipped = {e: (RED if c == BLUE else BLUE) for e, c in self.color_of.items()}
        return EdgeColoring.over(self.color_of, flipped, vertices=self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return dict(self.color_of) == dict(other.color_of)

    def __hash__(self) -> int:
        return hash(frozenset(self.color_of.items()))

    def __repr__(self) -> str:
        reds = sum(1 for c in self.color_of.values() if c == RED)
        return f"EdgeColoring({reds} red / {len(self.color_of) - reds} blue)"


@dataclass(frozen=True)
class NacStatus:
    surjective: bool
    is_nac: bool
    is_cartesian: bool
    witness: Optional[tuple] = None


def _coloring_of(edges, coloring) -> EdgeColoring:
    if isinstance(coloring, EdgeColoring):
        missing = [e for e in _canonical_edges(edges) if e not in coloring.color_of]
        if missing:
            raise PartialColoring(f"edges without color: {missing[:3]}")
        return coloring
    return EdgeColoring.over(edges, coloring)


def _monochromatic_path(coloring: EdgeColoring, color: str, start: V,
                        goal: V) -> Optional[tuple]:
    """Shortest path between two vertices inside one color's subgraph."""
    adj: dict[V, list[V]] = {}
    for u, v in coloring.edges_of(color):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if start not in adj:
        return None
    prev: dict[V, V] = {start: start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if x == goal:
            path = [x]
            while path[-1] != start:
                path.append(prev[path[-1]])
            return tuple(reversed(path))
        for n in sorted(adj.get(x, ())):
            if n not in prev:
                prev[n] = x
                queue.append(n)
    return None


def _evaluate(coloring: EdgeColoring) -> NacStatus:
    colors_used = set(coloring.color_of.values())
    if colors_used != {RED, BLUE}:
        missing = BLUE if RED in colors_used else RED
        return NacStatus(surjective=False, is_nac=False, is_cartesian=False,
                         witness=("not_surjective", missing))

    # An "almost cycle" is a cycle with exactly one edge of some color, i.e.
    # an edge whose endpoints already lie in one component of the other color.
    for color, comps in ((RED, coloring.blue_components),
                         (BLUE, coloring.red_components)):
        other = BLUE if color == RED else RED
        for u, v in coloring.edges_of(color):
            for comp in comps:
                if u in comp and v in comp:
                    path = _monochromatic_path(coloring, other, u, v)
                    return NacStatus(
                        surjective=True, is_nac=False, is_cartesian=False,
                        witness=("almost_cycle", (u, v), path))

    for red_comp in coloring.red_components:
        for blue_comp in coloring.blue_components:
            overlap = red_comp & blue_comp
            if len(overlap) > 1:
                pair = tuple(sorted(overlap))[:2]
                return NacStatus(surjective=True, is_nac=True, is_cartesian=False,
                                 witness=("red_blue_pair", pair))
    return NacStatus(surjective=True, is_nac=True, is_cartesian=True)


def check_nac(edges: Iterable[Sequence], coloring) -> NacStatus:
    """Full NAC/cartesian status of a total coloring of the given edges."""
    return _evaluate(_coloring_of(edges, coloring))


def check_cartesian(edges: Iterable[Sequence], coloring) -> NacStatus:
    """Same evaluation as :func:`check_nac`; the cartesian flag additionally
    requires every red-component/blue-component intersection to hold at most
    one vertex."""
    return _evaluate(_coloring_of(edges, coloring))


def brute_force_nac_oracle(edges: Iterable[Sequence], cartesian_only: bool = False,
                           max_edges: int = 24) -> list[EdgeColoring]:
    """Exhaustively scan all 2^|E| colorings.  Test oracle; guarded."""
    canon = _canonical_edges(edges)
    if len(canon) > max_edges:
        raise TooLarge(f"{len(canon)} edges exceed the brute-force guard ({max_edges})")
    found = []
    for mask in range(2 ** len(canon)):
        colors = {e: (RED if (mask >> i) & 1 else BLUE) for i, e in enumerate(canon)}
        coloring = EdgeColoring.over(canon, colors)
        status = _evaluate(coloring)
        if status.is_nac and (status.is_cartesian or not cartesian_only):
            found.append(coloring)
    return found


def enumerate_cartesian_nac(braced) -> Iterator[EdgeColoring]:
    """All cartesian NAC-colorings of a braced framework, deterministically.

    When the underlying graph is ribbon-cutting and all vertex pairs are
    ribbon-separated, these are exactly the 2^c - 2 surjective red/blue
    assignments to the c connected components of the bracing graph, expanded
    through monochromatic braced ribbons.  Otherwise the function warns and
    falls back to filtered brute force.
    """
    from .rigidity import BracedFramework, bracing_graph

    assert isinstance(braced, BracedFramework)
    pf = braced.pframework
    if not pf.is_ribbon_cutting or pf.unseparated_pair is not None:
        warnings.warn(
            "framework is outside the fast enumeration theory; "
            "falling back to brute force", PreconditionUnverified)
        for coloring in brute_force_nac_oracle(braced.all_edges, cartesian_only=True):
            yield coloring
        return

    graph_b = bracing_graph(braced)
    components = graph_b.components()
    c = len(components)
    all_edges = braced.all_edges
    vertices = pf.graph.vertices
    for mask in range(1, 2 ** c - 1):
        colors: dict[E, str] = {}
        for j, comp in enumerate(components):
            color = RED if (mask >> j) & 1 else BLUE
            for rid in comp:
                for e in braced.braced_ribbons[rid]:
                    colors[e] = color
        yield EdgeColoring.over(all_edges, colors, vertices=vertices)


@dataclass(frozen=True)
class ProductColoring:
    """A cartesian product graph with its canonical two-coloring: edges that
    vary the first coordinate are red, the rest blue."""

    vertices: tuple
    edges: tuple[E, ...]
    coloring: EdgeColoring


def product_coloring(g: tuple[Sequence, Iterable[Sequence]],
                     h: tuple[Sequence, Iterable[Sequence]]) -> ProductColoring:
    """Cartesian product of two graphs given as (vertices, edges) pairs."""
    g_vertices, g_edges = list(g[0]), _canonical_edges(g[1])
    h_vertices, h_edges = list(h[0]), _canonical_edges(h[1])
    if len(g_vertices) < 2 or len(h_vertices) < 2:
        raise TrivialFactor("both factors need at least two vertices")

    vertices = tuple(sorted((u, x) for u in g_vertices for x in h_vertices))
    colors: dict[E, str] = {}
    edges = []
    for u, v in g_edges:
        for x in h_vertices:
            e = _edge((u, x), (v, x))
            edges.append(e)
            colors[e] = RED
    for x, y in h_edges:
        for u in g_vertices:
            e = _edge((u, x), (u, y))
            edges.append(e)
            colors[e] = BLUE
    coloring = EdgeColoring.over(edges, colors, vertices=vertices)
    return ProductColoring(vertices=vertices, edges=tuple(sorted(edges)),
                           coloring=coloring)


@dataclass(frozen=True)
class QuotientEmbedding:
    """Quotient graphs of a cartesian coloring plus the vertex embedding.

    ``q1`` has one vertex per red component (adjacency induced by blue edges),
    ``q2`` symmetric; ``h`` maps every vertex to its (red, blue) component
    index pair and is an injective morphism into the product of q1 and q2.
    """

    q1_vertices: tuple[frozenset, ...]
    q1_edges: tuple[tuple[int, int], ...]
    q2_vertices: tuple[frozenset, ...]
    q2_edges: tuple[tuple[int, int], ...]
    h: Mapping[V, tuple[int, int]]


def product_embedding(edges: Iterable[Sequence], coloring) -> QuotientEmbedding:
    """Embed a cartesian-colored graph into the product of its quotients.

    Raises NotCartesian unless the coloring passes the cartesian check.  The
    construction is verified on the way out: h must be injective, every edge
    must map to a product edge, and every quotient vertex must occur.
    """
    col = _coloring_of(edges, coloring)
    status = _evaluate(col)
    if not status.is_cartesian:
        raise NotCartesian(f"coloring is not cartesian: {status.witness}")

    red_comps = col.red_components
    blue_comps = col.blue_components
    red_index = {v: i for i, comp in enumerate(red_comps) for v in comp}
    blue_index = {v: i for i, comp in enumerate(blue_comps) for v in comp}
    h = {v: (red_index[v], blue_index[v]) for v in col.vertices}

    q1_edges = set()
    q2_edges = set()
    for (u, v), color in col.color_of.items():
        if color == BLUE:
            i, j = red_index[u], red_index[v]
            q1_edges.add((min(i, j), max(i, j)))
        else:
            i, j = blue_index[u], blue_index[v]
            q2_edges.add((min(i, j), max(i, j)))

    embedding = QuotientEmbedding(
        q1_vertices=red_comps, q1_edges=tuple(sorted(q1_edges)),
        q2_vertices=blue_comps, q2_edges=tuple(sorted(q2_edges)),
        h=h,
    )
    _verify_embedding(col, embedding)
    return embedding


def _verify_embedding(col: EdgeColoring, emb: QuotientEmbedding) -> None:
    images = list(emb.h.values())
    if len(set(images)) != len(images):
        raise NotCartesian("embedding is not injective")  # pragma: no cover
    q1 = set(emb.q1_edges)
    q2 = set(emb.q2_edges)
    for u, v in col.color_of:
        (r1, b1), (r2, b2) = emb.h[u], emb.h[v]
        same_red = r1 == r2 and (min(b1, b2), max(b1, b2)) in q2
        same_blue = b1 == b2 and (min(r1, r2), max(r1, r2)) in q1
        if not (same_red or same_blue):
            raise NotCartesian(f"edge ({u!r}, {v!r}) does not map to a product edge")  # pragma: no cover
    used_red = {r for r, _ in images}
    used_blue = {b for _, b in images}
    if used_red != set(range(len(emb.q1_vertices))) or \
            used_blue != set(range(len(emb.q2_vertices))):
        raise NotCartesian("quotient vertex missing from the embedding image")  # pragma: no cover
