"""Placements, parallelogram validation, framework constructors and generators.

A parallelogram placement maps vertices to points in the plane, injectively,
so that every 4-cycle closes as a parallelogram.  A connected graph whose
every ribbon is an edge cut, together with such a placement, is the central
object of the package (:class:`PFramework`).

Geometric predicates use an absolute tolerance ``eps`` (default 1e-9,
overridable per placement or via the ``BRACE_RIG_EPS`` environment variable
in the I/O layer).  Instances are immutable; everything here is pure apart
from construction-time caches.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BadIntersection,
    BoundaryNotSimple,
    DegenerateParallelogram,
    EdgeNotFound,
    ForbiddenTranslation,
    InconsistentRibbon,
    MissingCoordinate,
    NotEdgeCut,
    RibbonNotSimpleCut,
    SeparationViolated,
    ValidationError,
)
from .graph import (
    Edge,
    Ribbon,
    RibbonPartition,
    StructuralGraph,
    classify_ribbon_cutting,
    compute_ribbons,
    edge_key,
    separating_ribbon,
    separation_witness,
)

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-9

Point = tuple[float, float]


def vec_add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def vec_sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def vec_norm(a: Point) -> float:
    return math.hypot(a[0], a[1])


def vec_dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def vec_cross(a: Point, b: Point) -> float:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class Placement:
    """Vertex coordinates plus the tolerance used by geometric predicates."""

    coords: Mapping[str, Point]
    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if self.eps < 0:
            raise ValueError("eps must be non-negative")

    def point(self, v: str) -> Point:
        try:
            return self.coords[v]
        except KeyError:
            raise MissingCoordinate(f"no coordinate for vertex {v!r}") from None

    def translated(self, moved: Iterable[str], t: Point) -> "Placement":
        new = dict(self.coords)
        for v in moved:
            new[v] = vec_add(new[v], t)
        return Placement(coords=new, eps=self.eps)

    def normalized_to(self, origin_vertex: str) -> "Placement":
        o = self.point(origin_vertex)
        return Placement(
            coords={v: vec_sub(p, o) for v, p in self.coords.items()},
            eps=self.eps,
        )


@dataclass(frozen=True)
class Violation:
    """One validation failure: ``kind`` plus the vertices/cycle involved."""

    kind: str  # "coincident" | "not_parallelogram" | "three_cycle"
    items: tuple


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def validate_parallelogram_placement(g: StructuralGraph,
                                     placement: Placement) -> ValidationReport:
    """Check injectivity and that every 4-cycle closes as a parallelogram.

    Also flags 3-cycles: a graph with a 3-cycle can never carry a
    parallelogram placement, so they are reported as violations up front.
    """
    for v in g.vertices:
        placement.point(v)

    eps = placement.eps
    violations: list[Violation] = []

    for u, v in combinations(g.vertices, 2):
        if vec_dist(placement.point(u), placement.point(v)) <= eps:
            violations.append(Violation("coincident", (u, v)))

    for cycle in g.four_cycles:
        a, b, c, d = (placement.point(x) for x in cycle.vertices)
        gap = (a[0] - b[0] + c[0] - d[0], a[1] - b[1] + c[1] - d[1])
        if vec_norm(gap) > eps:
            violations.append(Violation("not_parallelogram", cycle.vertices))

    for tri in g.triangles:
        violations.append(Violation("three_cycle", tri))

    return ValidationReport(ok=not violations, violations=tuple(violations))


class PFramework:
    """A graph with a validated parallelogram placement and ribbon partition.

    The placement is always validated at construction.  The ribbon-cutting
    property is computed and recorded; operations that rely on the rigidity
    theory (verdicts, coloring enumeration, flex synthesis, close-four-cycle)
    refuse frameworks that fail it rather than guessing, so documents for
    graphs outside the theory can still be loaded and inspected.
    """

    def __init__(self, graph: StructuralGraph, placement: Placement,
                 partition: RibbonPartition, _internal: bool = False):
        if not _internal:
            raise TypeError("use PFramework.build(graph, placement)")
        self.graph = graph
        self.placement = placement
        self.partition = partition

    @classmethod
    def build(cls, graph: StructuralGraph, placement: Placement) -> "PFramework":
        report = validate_parallelogram_placement(graph, placement)
        if not report.ok:
            raise ValidationError(
                f"not a parallelogram placement: {report.violations[:3]}")
        partition = compute_ribbons(graph)
        return cls(graph, placement, partition, _internal=True)

    @property
    def eps(self) -> float:
        return self.placement.eps

    @cached_property
    def cut_report(self):
        return classify_ribbon_cutting(self.graph, self.partition)

    @property
    def is_ribbon_cutting(self) -> bool:
        return self.cut_report.ribbon_cutting

    @cached_property
    def unseparated_pair(self) -> Optional[tuple[str, str]]:
        return separation_witness(self.graph, self.partition)

    def require_theory_preconditions(self) -> None:
        """Raise SeparationViolated unless ribbon-cutting + pairwise separation hold."""
        if not self.is_ribbon_cutting:
            bad = self.cut_report.offending_ribbons
            raise SeparationViolated(
                f"{len(bad)} ribbon(s) are not edge cuts: {bad}",
                offending_ribbons=bad)
        pair = self.unseparated_pair
        if pair is not None:
            raise SeparationViolated(
                f"vertices {pair[0]!r} and {pair[1]!r} are not separated by any ribbon",
                witness_pair=pair)

    def __repr__(self) -> str:
        return (f"PFramework({len(self.graph.vertices)} vertices, "
                f"{len(self.graph.edges)} edges, {len(self.partition)} ribbons)")


def _two_sides(pf: PFramework, ribbon: Ribbon) -> tuple[frozenset[str], frozenset[str]]:
    """The two sides of an edge-cut ribbon; the one holding the smallest
    vertex of the graph comes first."""
    if not ribbon.is_edge_cut:
        raise NotEdgeCut(f"ribbon {ribbon.id} is not an edge cut")
    if len(ribbon.components) != 2:
        raise NotEdgeCut(
            f"ribbon {ribbon.id} splits the graph into {len(ribbon.components)} "
            "components; side operations need exactly two")
    smallest = pf.graph.vertices[0]
    first, second = ribbon.components
    if smallest in second:
        first, second = second, first
    return first, second


def translate_side(pf: PFramework, ribbon_id: int, t: Point) -> Placement:
    """Translate one side of an edge-cut ribbon by ``t``.

    The side containing the smallest vertex stays fixed.  ``t`` must avoid the
    finite set of difference vectors that would make two vertices coincide.
    """
    ribbon = pf.partition.ribbons[ribbon_id]
    fixed, moved = _two_sides(pf, ribbon)
    eps = pf.eps
    for u1 in fixed:
        p1 = pf.placement.point(u1)
        for u2 in moved:
            diff = vec_sub(p1, pf.placement.point(u2))
            if vec_dist(diff, t) <= eps:
                raise ForbiddenTranslation(
                    f"translation {t} maps {u2!r} onto {u1!r}")
    return pf.placement.translated(moved, t)


def ribbon_translation_vector(pf: PFramework, ribbon_id: int) -> Point:
    """The common placed vector of a simple edge-cut ribbon, oriented from the
    side holding the smallest vertex to the other side.  All member edges must
    agree within eps; disagreement means the placement is not a parallelogram
    placement."""
    ribbon = pf.partition.ribbons[ribbon_id]
    if not ribbon.is_simple or not ribbon.is_edge_cut:
        raise RibbonNotSimpleCut(
            f"ribbon {ribbon_id} must be simple and an edge cut")
    first, _ = _two_sides(pf, ribbon)
    vectors = []
    for u, v in ribbon.edges:
        if u in first:
            vectors.append(vec_sub(pf.placement.point(v), pf.placement.point(u)))
        else:
            vectors.append(vec_sub(pf.placement.point(u), pf.placement.point(v)))
    ref = vectors[0]
    for vec in vectors[1:]:
        if vec_dist(ref, vec) > pf.eps:
            raise InconsistentRibbon(
                f"ribbon {ribbon_id} edges disagree: {ref} vs {vec}")
    return ref


def _fresh_vertices(g: StructuralGraph, count: int, prefix: str = "n") -> list[str]:
    existing = set(g.vertices)
    out: list[str] = []
    k = len(existing)
    while len(out) < count:
        name = f"{prefix}{k}"
        if name not in existing:
            existing.add(name)
            out.append(name)
        k += 1
    return out


def _min_edge_length(pf: PFramework) -> float:
    return min(
        vec_dist(pf.placement.point(u), pf.placement.point(v))
        for u, v in pf.graph.edges
    )


def add_four_cycle(pf: PFramework, u: str, v: str, seed: int = 0) -> PFramework:
    """Grow the framework by hanging a fresh parallelogram cell on edge uv.

    Two new vertices are placed at an offset ``d`` from u and v.  The offset
    direction is drawn from a seeded generator and resampled until no new
    coordinate collides with an existing one; a valid ``d`` always exists
    because only finitely many values are forbidden.
    """
    e = edge_key(u, v)
    if e not in pf.graph._edge_set:
        raise EdgeNotFound(f"{e!r} is not a structural edge")
    w1, w2 = _fresh_vertices(pf.graph, 2)
    pu, pv = pf.placement.point(u), pf.placement.point(v)
    rng = random.Random(f"{seed}:{len(pf.graph.vertices)}:{e[0]}:{e[1]}")
    magnitude = _min_edge_length(pf) / 2.0
    taken = list(pf.placement.coords.values())
    for _ in range(1000):
        angle = rng.uniform(0.0, 2.0 * math.pi)
        d = (magnitude * math.cos(angle), magnitude * math.sin(angle))
        q1, q2 = vec_add(pu, d), vec_add(pv, d)
        if all(vec_dist(q, p) > pf.eps for q in (q1, q2) for p in taken):
            break
    else:  # pragma: no cover - forbidden set is finite
        raise RuntimeError("could not sample a collision-free offset")
    graph = StructuralGraph(
        pf.graph.vertices + (w1, w2),
        list(pf.graph.edges) + [(u, w1), (w1, w2), (w2, v)],
    )
    coords = dict(pf.placement.coords)
    coords[w1], coords[w2] = q1, q2
    return PFramework.build(graph, Placement(coords=coords, eps=pf.eps))


def close_four_cycle_precondition(pf: PFramework, edge_uv: tuple[str, str],
                                  edge_vw: tuple[str, str]) -> tuple[str, ...]:
    """Vertices (other than u, v, w) that no admissible ribbon separates from v.

    Empty result means the close-four-cycle step is allowed.  Admissible
    ribbons are those containing neither uv nor vw.
    """
    u, v, w = _shared_path(pf.graph, edge_uv, edge_vw)
    blocked = []
    for x in pf.graph.vertices:
        if x in (u, v, w):
            continue
        rid = separating_ribbon(pf.graph, pf.partition, v, x,
                                exclude_edges=(edge_uv, edge_vw))
        if rid is None:
            blocked.append(x)
    return tuple(blocked)


def _shared_path(g: StructuralGraph, edge_uv: tuple[str, str],
                 edge_vw: tuple[str, str]) -> tuple[str, str, str]:
    e1, e2 = edge_key(*edge_uv), edge_key(*edge_vw)
    for e in (e1, e2):
        if e not in g._edge_set:
            raise EdgeNotFound(f"{e!r} is not a structural edge")
    if e1 == e2:
        raise ValueError("close-four-cycle needs two distinct edges")
    shared = set(e1) & set(e2)
    if len(shared) != 1:
        raise ValueError(f"edges {e1!r} and {e2!r} must share exactly one vertex")
    v = shared.pop()
    u = e1[0] if e1[1] == v else e1[1]
    w = e2[0] if e2[1] == v else e2[1]
    return u, v, w


def _candidate_translations(scale: float) -> Iterable[Point]:
    # Golden-angle sweep: directions never repeat, radii grow slowly.
    golden = 2.399963229728653
    for k in range(1, 10000):
        r = scale * (0.5 + k / 7.0)
        yield (r * math.cos(k * golden), r * math.sin(k * golden))


def _translation_avoiding(pf: PFramework, moved: frozenset[str],
                          avoid_points: Sequence[Point]) -> Point:
    """First candidate translation of ``moved`` that keeps the placement
    injective and keeps moved vertices off every point in ``avoid_points``."""
    eps = pf.eps
    fixed_pts = [pf.placement.point(x) for x in pf.graph.vertices if x not in moved]
    moved_pts = [pf.placement.point(x) for x in moved]
    scale = _min_edge_length(pf)
    for t in _candidate_translations(scale):
        ok = True
        for mp in moved_pts:
            q = vec_add(mp, t)
            if any(vec_dist(q, p) <= eps for p in fixed_pts):
                ok = False
                break
            if any(vec_dist(q, a) <= eps for a in avoid_points):
                ok = False
                break
        if ok:
            return t
    raise RuntimeError("no admissible translation found")  # pragma: no cover


def close_four_cycle(pf: PFramework, edge_uv: tuple[str, str],
                     edge_vw: tuple[str, str]) -> PFramework:
    """Close the path u-v-w into a parallelogram with one fresh vertex.

    Requires every vertex outside {u, v, w} to be separated from v by a ribbon
    containing neither uv nor vw; otherwise the extension admits no
    parallelogram placement and SeparationViolated is raised.  When the forced
    position collides with an existing vertex (or u, v, w are collinear), one
    side of a suitable ribbon is first translated, which the separation
    hypothesis always makes possible.
    """
    u, v, w = _shared_path(pf.graph, edge_uv, edge_vw)
    blocked = close_four_cycle_precondition(pf, edge_uv, edge_vw)
    if blocked:
        raise SeparationViolated(
            f"cannot close {u}-{v}-{w}: no admissible ribbon separates "
            f"{v!r} from {blocked}", blocked_vertices=blocked)

    current = pf
    for _ in range(64):
        pu = current.placement.point(u)
        pv = current.placement.point(v)
        pw = current.placement.point(w)
        target = vec_add(pu, vec_sub(pw, pv))
        collision = next(
            (x for x in current.graph.vertices
             if vec_dist(current.placement.point(x), target) <= current.eps),
            None,
        )
        if collision is None:
            name = _fresh_vertices(current.graph, 1)[0]
            graph = StructuralGraph(
                current.graph.vertices + (name,),
                list(current.graph.edges) + [(u, name), (name, w)],
            )
            coords = dict(current.placement.coords)
            coords[name] = target
            return PFramework.build(graph, Placement(coords=coords, eps=current.eps))

        if collision == v:
            # Degenerate cell (v is the midpoint of u and w): shift the side
            # of uv's ribbon away from v to break collinearity.
            rid = current.partition.ribbon_of[edge_key(*edge_uv)]
            avoid: list[Point] = []
        else:
            rid = separating_ribbon(current.graph, current.partition, v, collision,
                                    exclude_edges=(edge_uv, edge_vw))
            assert rid is not None  # guaranteed by the precondition scan
            avoid = [target]
        ribbon = current.partition.ribbons[rid]
        moved = next((c for c in ribbon.components if v not in c), None)
        if moved is None:  # pragma: no cover - needs a non-edge-cut ribbon
            raise NotEdgeCut(
                f"placement repair needs ribbon {rid} to be an edge cut")
        t = _translation_avoiding(current, moved, avoid_points=avoid)
        placement = current.placement.translated(moved, t)
        current = PFramework.build(current.graph, placement)
    raise RuntimeError("close-four-cycle placement repair did not converge")  # pragma: no cover


# --- carpets -----------------------------------------------------------------

@dataclass(frozen=True)
class Parallelogram:
    """Four corner points in cyclic order; opposite sides must match."""

    corners: tuple[Point, Point, Point, Point]

    def validate(self, eps: float) -> None:
        a, b, c, d = self.corners
        gap = (a[0] - b[0] + c[0] - d[0], a[1] - b[1] + c[1] - d[1])
        if vec_norm(gap) > eps:
            raise DegenerateParallelogram(
                f"opposite sides differ by {vec_norm(gap):g}: {self.corners}")
        area = abs(vec_cross(vec_sub(b, a), vec_sub(d, a)))
        if area <= max(eps, eps * max(vec_dist(a, b), vec_dist(a, d)) ** 2):
            raise DegenerateParallelogram(f"zero-area parallelogram: {self.corners}")


class _PointSnapper:
    """Deterministic corner identification with an eps-sized grid hash."""

    def __init__(self, eps: float):
        self.eps = max(eps, 1e-300)
        self.points: list[Point] = []
        self.grid: dict[tuple[int, int], list[int]] = {}

    def _cell(self, p: Point) -> tuple[int, int]:
        return (int(math.floor(p[0] / self.eps)), int(math.floor(p[1] / self.eps)))

    def index_of(self, p: Point) -> int:
        cx, cy = self._cell(p)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for idx in self.grid.get((cx + dx, cy + dy), ()):
                    if vec_dist(self.points[idx], p) <= self.eps:
                        return idx
        idx = len(self.points)
        self.points.append(p)
        self.grid.setdefault((cx, cy), []).append(idx)
        return idx


def _shapely_polygon(p: Parallelogram):
    from shapely.geometry import Polygon

    return Polygon(p.corners)


def _check_carpet_intersections(cells: Sequence[Parallelogram], eps: float) -> None:
    """Any two parallelograms may meet in nothing, shared corners, or one full
    common edge; anything else (overlap, partial edge contact, T-joints) is a
    BadIntersection."""
    from shapely.geometry import LineString, MultiPoint
    from shapely.geometry import Point as ShapelyPoint

    polys = [_shapely_polygon(c) for c in cells]
    for i, j in combinations(range(len(cells)), 2):
        inter = polys[i].intersection(polys[j])
        if inter.is_empty:
            continue
        if inter.area > eps:
            raise BadIntersection(
                f"parallelograms {i} and {j} overlap with area {inter.area:g}")
        pts: list[Point]
        if isinstance(inter, ShapelyPoint):
            pts = [(inter.x, inter.y)]
            segments = []
        elif isinstance(inter, MultiPoint):
            pts = [(g.x, g.y) for g in inter.geoms]
            segments = []
        elif isinstance(inter, LineString):
            pts = []
            segments = [inter]
        else:
            geoms = list(getattr(inter, "geoms", []))
            pts = [(g.x, g.y) for g in geoms if isinstance(g, ShapelyPoint)]
            segments = [g for g in geoms if isinstance(g, LineString)]
            if len(pts) + len(segments) != len(geoms):
                raise BadIntersection(
                    f"parallelograms {i} and {j} meet in {inter.geom_type}")
        for p in pts:
            for k in (i, j):
                if not any(vec_dist(p, c) <= eps for c in cells[k].corners):
                    raise BadIntersection(
                        f"parallelograms {i} and {j} touch at {p}, "
                        f"which is not a corner of both")
        for seg in segments:
            ends = [(x, y) for x, y in seg.coords]
            if len(ends) != 2:
                raise BadIntersection(
                    f"parallelograms {i} and {j} share a non-segment boundary")
            for k in (i, j):
                if not _is_full_side(cells[k], ends, eps):
                    raise BadIntersection(
                        f"parallelograms {i} and {j} share a partial edge {ends}")


def _is_full_side(cell: Parallelogram, ends: Sequence[Point], eps: float) -> bool:
    corners = cell.corners
    for a, b in zip(corners, corners[1:] + corners[:1]):
        if (vec_dist(a, ends[0]) <= eps and vec_dist(b, ends[1]) <= eps) or \
           (vec_dist(a, ends[1]) <= eps and vec_dist(b, ends[0]) <= eps):
            return True
    return False


def carpet_to_framework(parallelograms: Sequence[Parallelogram | Sequence[Point]],
                        eps: float = DEFAULT_EPS) -> PFramework:
    """Build the framework spanned by a carpet of edge-to-edge parallelograms.

    Corners within eps are identified; vertices are named p0, p1, ... in
    lexicographic coordinate order.  The cells must meet only in shared
    corners or full common edges, and the edges used by exactly one cell must
    form a single simple cycle (the outer boundary).
    """
    if not parallelograms:
        raise ValueError("carpet needs at least one parallelogram")
    cells = [
        p if isinstance(p, Parallelogram) else Parallelogram(tuple(map(tuple, p)))
        for p in parallelograms
    ]
    for cell in cells:
        cell.validate(eps)
    _check_carpet_intersections(cells, eps)

    snapper = _PointSnapper(eps)
    cell_corner_ids = [[snapper.index_of(c) for c in cell.corners] for cell in cells]
    order = sorted(range(len(snapper.points)), key=lambda i: snapper.points[i])
    width = len(str(len(order) - 1))
    names = {}
    for rank, idx in enumerate(order):
        names[idx] = f"p{rank:0{width}d}"

    edge_use: dict[Edge, int] = {}
    edges: set[Edge] = set()
    for ids in cell_corner_ids:
        if len(set(ids)) != 4:
            raise DegenerateParallelogram("parallelogram corners collapse under snapping")
        for a, b in zip(ids, ids[1:] + ids[:1]):
            e = edge_key(names[a], names[b])
            edges.add(e)
            edge_use[e] = edge_use.get(e, 0) + 1

    for e, count in edge_use.items():
        if count > 2:
            raise BadIntersection(f"edge {e!r} is shared by {count} parallelograms")

    boundary = [e for e, count in edge_use.items() if count == 1]
    _check_boundary_cycle(boundary)

    vertices = sorted(names.values())
    coords = {names[idx]: snapper.points[idx] for idx in names}
    graph = StructuralGraph(vertices, sorted(edges))
    pf = PFramework.build(graph, Placement(coords=coords, eps=eps))
    if not pf.is_ribbon_cutting:  # pragma: no cover - impossible for valid carpets
        logger.warning("carpet produced a non-ribbon-cutting graph; "
                       "input may have an exotic boundary pinch")
    return pf


def _check_boundary_cycle(boundary: Sequence[Edge]) -> None:
    if not boundary:
        raise BoundaryNotSimple("carpet has no boundary edges")
    degree: dict[str, int] = {}
    adj: dict[str, list[str]] = {}
    for u, v in boundary:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    bad = sorted(v for v, d in degree.items() if d != 2)
    if bad:
        raise BoundaryNotSimple(
            f"boundary visits vertices {bad} other than exactly twice")
    start = min(adj)
    seen = {start}
    stack = [start]
    while stack:
        for n in adj[stack.pop()]:
            if n not in seen:
                seen.add(n)
                stack.append(n)
    if len(seen) != len(adj):
        raise BoundaryNotSimple("boundary edges form more than one cycle")


# --- generators ---------------------------------------------------------------

def generate_grid(a: int, b: int, eps: float = DEFAULT_EPS) -> PFramework:
    """An a-by-b grid of unit cells with its natural placement."""
    if a < 1 or b < 1:
        raise ValueError("grid needs at least one cell per direction")
    width_i = len(str(a))
    width_j = len(str(b))

    def name(i: int, j: int) -> str:
        return f"v{i:0{width_i}d}_{j:0{width_j}d}"

    vertices = [name(i, j) for i in range(a + 1) for j in range(b + 1)]
    edges = []
    for i in range(a + 1):
        for j in range(b + 1):
            if i < a:
                edges.append((name(i, j), name(i + 1, j)))
            if j < b:
                edges.append((name(i, j), name(i, j + 1)))
    coords = {name(i, j): (float(i), float(j))
              for i in range(a + 1) for j in range(b + 1)}
    graph = StructuralGraph(vertices, edges)
    return PFramework.build(graph, Placement(coords=coords, eps=eps))


def generate_random_grec(steps: int, seed: int, eps: float = DEFAULT_EPS) -> PFramework:
    """Grow a random framework from a unit cell by the two recursive moves.

    Each step either hangs a new cell on a random edge or closes a random
    corner path, the latter only when its separation precondition holds.
    Reproducible per seed.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    graph = StructuralGraph(
        ["n0", "n1", "n2", "n3"],
        [("n0", "n1"), ("n1", "n2"), ("n2", "n3"), ("n3", "n0")],
    )
    placement = Placement(
        coords={"n0": (0.0, 0.0), "n1": (1.0, 0.0), "n2": (1.0, 1.0), "n3": (0.0, 1.0)},
        eps=eps,
    )
    pf = PFramework.build(graph, placement)
    for _ in range(steps):
        if rng.random() < 0.5:
            pf = _random_close_or_add(pf, rng)
        else:
            pf = _random_add(pf, rng)
    return pf


def _random_add(pf: PFramework, rng: random.Random) -> PFramework:
    u, v = rng.choice(pf.graph.edges)
    return add_four_cycle(pf, u, v, seed=rng.randrange(2 ** 30))


def _random_close_or_add(pf: PFramework, rng: random.Random) -> PFramework:
    corners = []
    for v in pf.graph.vertices:
        ns = sorted(pf.graph.neighbors(v))
        for u, w in combinations(ns, 2):
            corners.append(((u, v), (v, w)))
    rng.shuffle(corners)
    for edge_uv, edge_vw in corners[:12]:
        if not close_four_cycle_precondition(pf, edge_uv, edge_vw):
            return close_four_cycle(pf, edge_uv, edge_vw)
    return _random_add(pf, rng)
