"""Construction, verification and export of one-parameter flexes.

A cartesian NAC-coloring of a flexible braced framework yields an explicit
motion: translate the base placement so a chosen base vertex sits at the
origin, split every vertex position into a red-component offset plus a
blue-component offset (walk sums of opposite-colored edge vectors), then
rotate the red offsets rigidly:

    position_t(v) = [[cos t, sin t], [-sin t, cos t]] . red_offset(v) + blue_offset(v)

At t = 0 this reproduces the base placement; every edge (including braces)
keeps its length for all t.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .coloring import BLUE, EdgeColoring, check_cartesian
from .errors import (
    LengthDriftExceeded,
    NotCartesian,
    OffsetInconsistent,
    UnsupportedFormat,
)
from .geometry import Placement, Point, vec_add, vec_dist, vec_sub
from .graph import edge_key
from .rigidity import BracedFramework


@dataclass(frozen=True)
class Flex:
    """A one-parameter flex anchored at ``base_vertex`` (placed at the origin)."""

    base_vertex: str
    base_placement: Placement
    red_offset: Mapping[str, Point]
    blue_offset: Mapping[str, Point]
    coloring: EdgeColoring
    edges: tuple[tuple[str, str], ...]  # structural edges + braces

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.base_placement.coords))


def build_flex(braced: BracedFramework, coloring: EdgeColoring) -> Flex:
    """Derive the offset decomposition from a cartesian NAC-coloring.

    Offsets are accumulated along a breadth-first tree from the smallest
    vertex; every non-tree edge (and every brace) is then replayed to confirm
    the sums are walk-independent within eps.
    """
    pf = braced.pframework
    status = check_cartesian(braced.all_edges, coloring)
    if not status.is_cartesian:
        raise NotCartesian(f"flex needs a cartesian NAC-coloring: {status.witness}")

    base = pf.graph.vertices[0]
    placement = pf.placement.normalized_to(base)
    eps = pf.eps

    color_of = dict(coloring.color_of) if isinstance(coloring, EdgeColoring) \
        else dict(coloring)

    adjacency: dict[str, list[str]] = {v: [] for v in pf.graph.vertices}
    for u, v in pf.graph.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    red: dict[str, Point] = {base: (0.0, 0.0)}
    blue: dict[str, Point] = {base: (0.0, 0.0)}
    tree_edges: set[tuple[str, str]] = set()
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for n in sorted(adjacency[x]):
            if n in red:
                continue
            step = vec_sub(placement.point(n), placement.point(x))
            color = color_of[edge_key(x, n)]
            if color == BLUE:
                red[n] = vec_add(red[x], step)
                blue[n] = blue[x]
            else:
                red[n] = red[x]
                blue[n] = vec_add(blue[x], step)
            tree_edges.add(edge_key(x, n))
            queue.append(n)

    for u, v in braced.all_edges:
        e = edge_key(u, v)
        if e in tree_edges:
            continue
        step = vec_sub(placement.point(v), placement.point(u))
        color = color_of[e]
        if color == BLUE:
            red_expected = vec_add(red[u], step)
            blue_expected = blue[u]
        else:
            red_expected = red[u]
            blue_expected = vec_add(blue[u], step)
        if vec_dist(red[v], red_expected) > eps or \
                vec_dist(blue[v], blue_expected) > eps:
            raise OffsetInconsistent(
                f"offsets disagree across edge {e!r}; placement and coloring "
                "are not a valid framework/cartesian pair")

    for v in pf.graph.vertices:
        recovered = vec_add(red[v], blue[v])
        if vec_dist(recovered, placement.point(v)) > eps:
            raise OffsetInconsistent(
                f"offset sum does not recover the base position of {v!r}")

    return Flex(
        base_vertex=base,
        base_placement=placement,
        red_offset=red,
        blue_offset=blue,
        coloring=coloring if isinstance(coloring, EdgeColoring)
        else EdgeColoring.over(braced.all_edges, coloring),
        edges=braced.all_edges,
    )


def sample_flex(flex: Flex, t: float) -> Placement:
    """The placement at parameter t (clockwise rotation of the red offsets)."""
    cos_t, sin_t = math.cos(t), math.sin(t)
    coords = {}
    for v in flex.base_placement.coords:
        rx, ry = flex.red_offset[v]
        bx, by = flex.blue_offset[v]
        coords[v] = (cos_t * rx + sin_t * ry + bx,
                     -sin_t * rx + cos_t * ry + by)
    return Placement(coords=coords, eps=flex.base_placement.eps)


@dataclass(frozen=True)
class FlexReport:
    max_length_drift: float
    degenerate_ts: tuple[float, ...]
    nontrivial: bool


def _pair_profile(flex: Flex, u: str, v: str) -> tuple[float, float, float]:
    """Coefficients (A, B, C) with squared distance A + B cos t + C sin t."""
    rx = flex.red_offset[u][0] - flex.red_offset[v][0]
    ry = flex.red_offset[u][1] - flex.red_offset[v][1]
    bx = flex.blue_offset[u][0] - flex.blue_offset[v][0]
    by = flex.blue_offset[u][1] - flex.blue_offset[v][1]
    a = rx * rx + ry * ry + bx * bx + by * by
    b = 2.0 * (rx * bx + ry * by)
    c = 2.0 * (ry * bx - rx * by)
    return a, b, c


def verify_flex(flex: Flex, sample_count: int = 100, tol: float = 1e-9,
                seed: int = 0) -> FlexReport:
    """Sample the flex and check edge-length conservation and non-triviality.

    Every structural edge and brace must keep its base length within tol at
    every sample; the flex is non-trivial when some non-edge vertex pair
    changes its distance by more than tol across the samples.  Samples where
    two vertices come within tol of each other are reported as degenerate, not
    failed: such placements are still equivalent, just not injective.

    Pairwise squared distance along the flex is A + B cos t + C sin t, so
    pairs whose full analytic range already fits inside tol are skipped
    without sampling; the skipped pairs cannot change the report.
    """
    if sample_count < 2:
        raise ValueError("need at least two samples")
    rng = random.Random(seed)
    ts = sorted(rng.uniform(0.0, 2.0 * math.pi) for _ in range(sample_count))
    trig = [(math.cos(t), math.sin(t)) for t in ts]

    base = flex.base_placement
    vertices = flex.vertices
    edge_set = {edge_key(u, v) for u, v in flex.edges}

    max_drift = 0.0
    for e in sorted(edge_set):
        a, b, c = _pair_profile(flex, e[0], e[1])
        base_len = vec_dist(base.point(e[0]), base.point(e[1]))
        for (cos_t, sin_t), t in zip(trig, ts):
            drift = abs(math.sqrt(max(a + b * cos_t + c * sin_t, 0.0)) - base_len)
            if drift > max_drift:
                max_drift = drift
            if drift > tol:
                raise LengthDriftExceeded(
                    f"edge {e!r} drifted by {drift:g} at t={t:g}")

    candidates = []  # (analytic range, u, v, A, B, C) for non-edge pairs
    near_zero = []   # pairs that can come within tol of coincidence
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            a, b, c = _pair_profile(flex, u, v)
            amp = math.hypot(b, c)
            low = math.sqrt(max(a - amp, 0.0))
            high = math.sqrt(a + amp)
            if high - low > tol:
                candidates.append((high - low, u, v, a, b, c))
            if low <= tol:
                near_zero.append((a, b, c))

    nontrivial = False
    for _, u, v, a, b, c in sorted(candidates, reverse=True):
        sampled = [math.sqrt(max(a + b * ct + c * st, 0.0)) for ct, st in trig]
        if max(sampled) - min(sampled) > tol:
            nontrivial = True
            break

    degenerate = []
    for t, (cos_t, sin_t) in zip(ts, trig):
        for a, b, c in near_zero:
            if math.sqrt(max(a + b * cos_t + c * sin_t, 0.0)) <= tol:
                degenerate.append(t)
                break

    return FlexReport(
        max_length_drift=max_drift,
        degenerate_ts=tuple(degenerate),
        nontrivial=nontrivial,
    )


def _frame_times(frames: int, t_range: tuple[float, float]) -> list[float]:
    if frames < 2:
        raise ValueError("need at least two frames")
    t0, t1 = t_range
    return [t0 + i * (t1 - t0) / (frames - 1) for i in range(frames)]


def _frame_coords(flex: Flex, ts: Sequence[float]) -> list[dict[str, list[float]]]:
    frames = []
    for t in ts:
        placed = sample_flex(flex, t)
        frames.append({v: [placed.coords[v][0], placed.coords[v][1]]
                       for v in sorted(placed.coords)})
    return frames


def export_animation(flex: Flex, frames: int, t_range: tuple[float, float] = (0.0, 2.0 * math.pi),
                     format: str = "json") -> bytes:
    """Serialize sampled frames as JSON or as an animated SVG document."""
    ts = _frame_times(frames, t_range)
    if format == "json":
        payload = {"t_values": ts, "frames": _frame_coords(flex, ts)}
        return _canonical_json_bytes(payload)
    if format == "svg":
        return _svg_animation(flex, ts).encode("utf-8")
    raise UnsupportedFormat(f"unknown animation format {format!r}")


def _canonical_json_bytes(payload) -> bytes:
    from .document import canonical_json

    return (canonical_json(payload) + "\n").encode("utf-8")


def _svg_animation(flex: Flex, ts: Sequence[float]) -> str:
    frames = _frame_coords(flex, ts)
    xs = [x for frame in frames for x, _ in frame.values()]
    ys = [y for frame in frames for _, y in frame.values()]
    pad = 0.5
    min_x, max_x = min(xs) - pad, max(xs) + pad
    min_y, max_y = min(ys) - pad, max(ys) + pad

    def fmt(value: float) -> str:
        return format(value, ".6f")

    duration = max(len(frames) * 0.25, 0.5)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{fmt(min_x)} {fmt(min_y)} {fmt(max_x - min_x)} {fmt(max_y - min_y)}">',
    ]
    n = len(frames)
    for idx, frame in enumerate(frames):
        lines = []
        for u, v in flex.edges:
            x1, y1 = frame[u]
            x2, y2 = frame[v]
            lines.append(
                f'<polyline points="{fmt(x1)},{fmt(-y1 + min_y + max_y)} '
                f'{fmt(x2)},{fmt(-y2 + min_y + max_y)}" '
                'stroke="black" stroke-width="0.03" fill="none"/>')
        parts.append(f'<g id="frame{idx:03d}" opacity="{1 if idx == 0 else 0}">')
        parts.extend(lines)
        parts.append(
            f'<animate attributeName="opacity" values="{";".join("1" if i == idx else "0" for i in range(n))}" '
            f'dur="{fmt(duration)}s" repeatCount="indefinite" calcMode="discrete"/>')
        parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
