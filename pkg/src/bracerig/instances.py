"""Built-in example frameworks used by the docs, fixtures and tests.

Each instance exercises a distinct combinatorial situation: simple strips and
fans, a non-simple ribbon, a graph whose ribbons all cut but whose vertices
are not all separated, braced meshes with connected and split bracing graphs,
and a grid whose missing edge fragments several ribbons.  Placements are
built from a handful of seed points plus parallelogram vector sums, so every
instance that claims to be a parallelogram placement is one by construction.
"""

from __future__ import annotations

import math

from .geometry import PFramework, Placement, Point, vec_add, vec_sub
from .graph import StructuralGraph

Brace = tuple[str, str]


def _polar(origin: Point, radius: float, degrees: float) -> Point:
    rad = math.radians(degrees)
    return (origin[0] + radius * math.cos(rad), origin[1] + radius * math.sin(rad))


def _pf(coords: dict[str, Point], edges: list[tuple[str, str]],
        eps: float = 1e-9) -> PFramework:
    graph = StructuralGraph(sorted(coords), edges)
    return PFramework.build(graph, Placement(coords=coords, eps=eps))


def strip_flap() -> PFramework:
    """Three cells in a row plus one cell flapped on top: 10 vertices,
    13 edges, 5 ribbons, every ribbon an edge cut."""
    a: Point = (0.0, 0.0)
    b: Point = (1.0, 0.0)
    c: Point = (1.0, 1.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 0.8, 30.0)
    f = vec_add(e, vec_sub(c, b))
    g = _polar(e, 1.1, -20.0)
    h = vec_add(g, vec_sub(f, e))
    i = _polar(c, 0.9, 90.0 - 10.0)
    j = vec_add(f, vec_sub(i, c))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i, j=j)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("e", "g"), ("g", "h"), ("h", "f"),
             ("c", "i"), ("f", "j"), ("i", "j")]
    return _pf(coords, edges)


def fan6() -> PFramework:
    """Six cells fanned around one hub vertex: 13 vertices, 18 edges,
    6 ribbons."""
    a: Point = (0.0, 0.0)
    b: Point = (1.0, 0.0)
    c = _polar(b, 1.0, 90.0 + 40.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 1.0, 90.0 - 10.0)
    f = vec_add(c, vec_sub(e, b))
    g = _polar(b, 1.0, 90.0 - 45.0)
    h = vec_add(e, vec_sub(g, b))
    i = _polar(b, 1.0, 90.0 - 110.0)
    j = vec_add(g, vec_sub(i, b))
    k = _polar(b, 1.0, 90.0 - 180.0)
    l = vec_add(i, vec_sub(k, b))
    m = vec_add(a, vec_sub(k, b))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, i=i, j=j, k=k, l=l, m=m)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("b", "g"), ("g", "h"), ("h", "e"),
             ("b", "i"), ("i", "j"), ("j", "g"), ("b", "k"), ("k", "l"),
             ("l", "i"), ("a", "m"), ("m", "k")]
    return _pf(coords, edges)


def square_with_inner_path() -> StructuralGraph:
    """A square with a two-edge path through an interior vertex.  Its single
    ribbon contains all six edges and is not simple, so no parallelogram
    placement exists; the graph is used for combinatorial tests only."""
    return StructuralGraph(
        ["a", "b", "c", "d", "e"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"), ("e", "d")],
    )


def pinched_ring() -> StructuralGraph:
    """A ring of four cells closed by an extra two-edge path.  Every ribbon is
    an edge cut, yet one vertex pair is separated by no ribbon, so the graph
    has no parallelogram placement."""
    return StructuralGraph(
        ["a", "b", "c", "d", "e", "f", "g", "h", "q"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
         ("e", "f"), ("f", "c"), ("d", "g"), ("f", "g"), ("a", "h"),
         ("g", "h"), ("b", "q"), ("q", "h")],
    )


def pinched_ring_base() -> PFramework:
    """The pinched ring without its closing path: a valid framework whose
    corner a-b / a-h cannot be closed into a cell."""
    a: Point = (-0.5, 0.0)
    b: Point = (1.3, 0.0)
    c: Point = (1.3, 1.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 0.8, 30.0)
    f = vec_add(e, vec_sub(c, b))
    g = vec_add(d, vec_sub(f, c))
    h = vec_add(a, vec_sub(g, d))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("d", "g"), ("f", "g"), ("a", "h"),
             ("g", "h")]
    return _pf(coords, edges)


def mesh_quad_braced() -> tuple[PFramework, tuple[Brace, ...]]:
    """Four overlapping cells on 8 vertices with two braces."""
    a: Point = (0.0, 0.0)
    b: Point = (1.0, 0.0)
    c: Point = (1.0, 1.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 0.8, 30.0)
    f = vec_add(e, vec_sub(c, b))
    h = vec_add(a, vec_sub(e, b))
    k = vec_add(d, vec_sub(f, c))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, h=h, k=k)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("h", "k"), ("h", "e"), ("d", "k"),
             ("f", "k")]
    return _pf(coords, edges), (("a", "c"), ("f", "h"))


def hub_mesh_rigid() -> tuple[PFramework, tuple[Brace, ...]]:
    """Ten vertices, five cells, three braces; its bracing graph is connected."""
    a: Point = (0.0, 0.0)
    b: Point = (1.0, 0.0)
    c: Point = (1.0, 1.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 0.8, 30.0)
    f = vec_add(e, vec_sub(c, b))
    g = _polar(e, 1.1, -20.0)
    h = vec_add(g, vec_sub(f, e))
    j = vec_add(b, vec_sub(g, e))
    k = vec_add(d, vec_sub(f, c))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, j=j, k=k)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("e", "g"), ("g", "h"), ("h", "f"),
             ("g", "j"), ("b", "j"), ("d", "k"), ("f", "k")]
    return _pf(coords, edges), (("a", "c"), ("b", "f"), ("e", "j"))


def hub_mesh_flexible() -> tuple[PFramework, tuple[Brace, ...]]:
    """Thirteen vertices, six cells, three braces; its bracing graph has
    three components, so the framework keeps two degrees of freedom."""
    a: Point = (0.0, 0.0)
    b: Point = (1.0, 0.0)
    c: Point = (1.0, 1.0)
    d = vec_add(a, vec_sub(c, b))
    e = _polar(b, 0.8, 30.0)
    f = vec_add(e, vec_sub(c, b))
    g = _polar(e, 1.1, -20.0)
    h = vec_add(g, vec_sub(f, e))
    k = vec_add(d, vec_sub(f, c))
    l = _polar(k, 0.9, 105.0)
    m = vec_add(f, vec_sub(l, k))
    n = _rotate_around(vec_add(m, (1.3, 0.0)), k, 25.0)
    o = vec_add(f, vec_sub(n, m))
    coords = dict(a=a, b=b, c=c, d=d, e=e, f=f, g=g, h=h, k=k, l=l, m=m, n=n, o=o)
    edges = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("b", "e"),
             ("e", "f"), ("f", "c"), ("e", "g"), ("g", "h"), ("h", "f"),
             ("d", "k"), ("f", "k"), ("k", "l"), ("l", "m"), ("m", "f"),
             ("m", "n"), ("n", "o"), ("o", "f")]
    return _pf(coords, edges), (("a", "c"), ("e", "h"), ("f", "l"))


def _rotate_around(p: Point, center: Point, degrees: float) -> Point:
    rad = math.radians(degrees)
    dx, dy = p[0] - center[0], p[1] - center[1]
    return (center[0] + dx * math.cos(rad) - dy * math.sin(rad),
            center[1] + dx * math.sin(rad) + dy * math.cos(rad))


def _grid_vertex(i: int, j: int) -> str:
    return f"v{i}_{j}"


def _grid3x3() -> PFramework:
    from .geometry import generate_grid

    return generate_grid(3, 3)


def _cell_brace(i: int, j: int) -> Brace:
    # Diagonal of the unit cell whose lower-left corner is (i, j).
    return (_grid_vertex(i, j), _grid_vertex(i + 1, j + 1))


def grid3x3_rigid() -> tuple[PFramework, tuple[Brace, ...]]:
    """The 3x3-cell grid braced so that rows and columns all link up."""
    cells = [(0, 2), (1, 2), (2, 2), (1, 1), (1, 0)]
    return _grid3x3(), tuple(_cell_brace(i, j) for i, j in cells)


def grid3x3_flexible() -> tuple[PFramework, tuple[Brace, ...]]:
    """Five braces arranged so one row/column pair stays detached."""
    cells = [(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)]
    return _grid3x3(), tuple(_cell_brace(i, j) for i, j in cells)


def grid_gap() -> PFramework:
    """A 4x3-cell grid missing one interior vertical edge.  The gap splits
    several ribbons into fragments that are no longer edge cuts, so the
    rigidity theory refuses this framework."""
    vertices = [f"v{i}{j}" for i in range(5) for j in range(4)]
    edges = []
    for i in range(5):
        for j in range(3):
            if not (i == 2 and j == 1):
                edges.append((f"v{i}{j}", f"v{i}{j + 1}"))
    for i in range(4):
        for j in range(4):
            edges.append((f"v{i}{j}", f"v{i + 1}{j}"))
    coords = {f"v{i}{j}": (float(i), float(j)) for i in range(5) for j in range(4)}
    return _pf(coords, edges)


def grid_gap_highlighted_ribbons(pf: PFramework) -> tuple[int, int]:
    """The two single-cell ribbon fragments just above the gap."""
    r1 = pf.partition.ribbon_of[("v12", "v22")]
    r2 = pf.partition.ribbon_of[("v22", "v32")]
    return (r1, r2)


CATALOG = {
    "strip_flap": lambda: (strip_flap(), ()),
    "fan6": lambda: (fan6(), ()),
    "mesh_quad_braced": mesh_quad_braced,
    "hub_braced_connected": hub_mesh_rigid,
    "hub_braced_split": hub_mesh_flexible,
    "grid3x3_rigid": grid3x3_rigid,
    "grid3x3_flexible": grid3x3_flexible,
    "grid5x4_gap": lambda: (grid_gap(), ()),
}
