"""Framework document format: canonical JSON parsing and serialization.

A framework document carries vertices with coordinates, structural edges and
braces.  Serialization is canonical: sorted keys, sorted vertex/edge lists,
floats at 12 significant digits, one trailing newline.  Parsing the canonical
serialization of a document reproduces it byte for byte, which keeps fixtures
diffable and golden tests stable.

Vertex ids must match ``[A-Za-z0-9_.-]+`` so that edge keys can be serialized
as comma-joined pairs elsewhere (colorings, ribbon maps).

``BRACE_RIG_EPS`` overrides the geometric tolerance used when a document is
instantiated.
"""

from __future__ import annotations

import json
import math
import os
import re
from dataclasses import dataclass
from typing import Any, Mapping, Optional, Sequence

from .errors import BraceRigError, SchemaError, SeparationViolated, ValidationError
from .geometry import DEFAULT_EPS, PFramework, Placement
from .graph import StructuralGraph, edge_key
from .rigidity import BracedFramework, build_braced

SCHEMA_VERSION = 1
_ID_PATTERN = re.compile(r"^[A-Za-z0-9_.-]+$")


def effective_eps(override: Optional[float] = None) -> float:
    if override is not None:
        return override
    raw = os.environ.get("BRACE_RIG_EPS")
    if raw:
        try:
            value = float(raw)
        except ValueError:
            raise SchemaError(f"BRACE_RIG_EPS is not a number: {raw!r}") from None
        if not math.isfinite(value) or value < 0:
            raise SchemaError(f"BRACE_RIG_EPS must be a finite non-negative number")
        return value
    return DEFAULT_EPS


@dataclass(frozen=True)
class FrameworkDocument:
    """Plain data view of a framework file."""

    vertices: tuple[tuple[str, float, float], ...]
    edges: tuple[tuple[str, str], ...]
    braces: tuple[tuple[str, str], ...]
    metadata: Optional[Mapping[str, Any]] = None
    schema_version: int = SCHEMA_VERSION

    def to_payload(self) -> dict:
        payload: dict[str, Any] = {
            "schema_version": self.schema_version,
            "vertices": [{"id": v, "x": x, "y": y} for v, x, y in self.vertices],
            "edges": [list(e) for e in self.edges],
            "braces": [list(b) for b in self.braces],
        }
        if self.metadata:
            payload["metadata"] = dict(self.metadata)
        return payload


def _round12(value: float) -> float:
    return float(format(value, ".12g"))


def _canonicalize(obj):
    if isinstance(obj, dict):
        return {str(k): _canonicalize(obj[k]) for k in sorted(obj, key=str)}
    if isinstance(obj, (list, tuple)):
        return [_canonicalize(x) for x in obj]
    if isinstance(obj, float):
        return _round12(obj)
    return obj


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, 12-significant-digit floats."""
    return json.dumps(_canonicalize(obj), sort_keys=True, separators=(",", ":"),
                      allow_nan=False)


def _reject_constant(name: str):
    raise SchemaError(f"non-finite number {name} is not allowed")


def _expect(condition: bool, message: str, path: str) -> None:
    if not condition:
        raise SchemaError(message, path=path)


def _parse_vertex(entry, index: int) -> tuple[str, float, float]:
    path = f"/vertices/{index}"
    _expect(isinstance(entry, dict), "vertex must be an object", path)
    for key in ("id", "x", "y"):
        _expect(key in entry, f"vertex missing {key!r}", path)
    vid = entry["id"]
    _expect(isinstance(vid, str) and _ID_PATTERN.match(vid) is not None,
            "vertex id must match [A-Za-z0-9_.-]+", f"{path}/id")
    coords = []
    for key in ("x", "y"):
        value = entry[key]
        _expect(isinstance(value, (int, float)) and not isinstance(value, bool),
                f"{key} must be a number", f"{path}/{key}")
        _expect(math.isfinite(float(value)), f"{key} must be finite", f"{path}/{key}")
        coords.append(float(value))
    extra = set(entry) - {"id", "x", "y"}
    _expect(not extra, f"unknown vertex keys {sorted(extra)}", path)
    return (vid, coords[0], coords[1])


def _parse_pair(entry, index: int, kind: str) -> tuple[str, str]:
    path = f"/{kind}/{index}"
    _expect(isinstance(entry, list) and len(entry) == 2,
            f"{kind} entry must be a pair", path)
    u, v = entry
    _expect(isinstance(u, str) and isinstance(v, str),
            f"{kind} entry must hold two vertex ids", path)
    return (u, v)


def parse_document(data: bytes | str) -> FrameworkDocument:
    """Schema-level parse: shape, types, id syntax, finiteness, uniqueness."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"document is not UTF-8: {exc}") from None
    try:
        raw = json.loads(data, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None

    _expect(isinstance(raw, dict), "document must be a JSON object", "/")
    _expect(raw.get("schema_version") == SCHEMA_VERSION,
            f"schema_version must be {SCHEMA_VERSION}", "/schema_version")
    for key in ("vertices", "edges"):
        _expect(isinstance(raw.get(key), list), f"{key} must be an array", f"/{key}")
    braces_raw = raw.get("braces", [])
    _expect(isinstance(braces_raw, list), "braces must be an array", "/braces")
    metadata = raw.get("metadata")
    if metadata is not None:
        _expect(isinstance(metadata, dict), "metadata must be an object", "/metadata")
    extra = set(raw) - {"schema_version", "vertices", "edges", "braces", "metadata"}
    _expect(not extra, f"unknown document keys {sorted(extra)}", "/")

    vertices = [_parse_vertex(entry, i) for i, entry in enumerate(raw["vertices"])]
    ids = [v for v, _, _ in vertices]
    _expect(len(set(ids)) == len(ids), "vertex ids must be unique", "/vertices")
    edges = [_parse_pair(entry, i, "edges") for i, entry in enumerate(raw["edges"])]
    braces = [_parse_pair(entry, i, "braces") for i, entry in enumerate(braces_raw)]

    return FrameworkDocument(
        vertices=tuple(sorted(vertices)),
        edges=tuple(sorted(edge_key(u, v) for u, v in edges)),
        braces=tuple(sorted(edge_key(u, v) for u, v in braces)),
        metadata=metadata,
    )


def document_to_braced(doc: FrameworkDocument,
                       eps: Optional[float] = None) -> BracedFramework:
    """Instantiate a document, running every module validation."""
    eps = effective_eps(eps)
    try:
        graph = StructuralGraph([v for v, _, _ in doc.vertices], doc.edges)
        placement = Placement(
            coords={v: (x, y) for v, x, y in doc.vertices}, eps=eps)
        pframework = PFramework.build(graph, placement)
        return build_braced(pframework, doc.braces)
    except ValidationError:
        raise
    except SeparationViolated:
        raise
    except BraceRigError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}", cause=exc) from exc


def parse_framework(data: bytes | str, eps: Optional[float] = None) -> BracedFramework:
    return document_to_braced(parse_document(data), eps=eps)


def braced_to_document(braced: BracedFramework,
                       metadata: Optional[Mapping[str, Any]] = None) -> FrameworkDocument:
    placement = braced.pframework.placement
    vertices = tuple(sorted(
        (v, _round12(x), _round12(y)) for v, (x, y) in placement.coords.items()))
    return FrameworkDocument(
        vertices=vertices,
        edges=braced.pframework.graph.edges,
        braces=braced.braces,
        metadata=metadata,
    )


def serialize_document(doc: FrameworkDocument) -> bytes:
    return (canonical_json(doc.to_payload()) + "\n").encode("utf-8")


def serialize_framework(braced: BracedFramework,
                        metadata: Optional[Mapping[str, Any]] = None) -> bytes:
    return serialize_document(braced_to_document(braced, metadata=metadata))


# --- shared report serializers (used by CLI and service) ---------------------

def edge_map_key(edge: Sequence[str]) -> str:
    return ",".join(edge)


def verdict_payload(verdict, braced: Optional[BracedFramework] = None) -> dict:
    payload = {
        "status": verdict.status,
        "bracing_components": [list(c) for c in verdict.bracing_components],
        "cartesian_nac_count": verdict.cartesian_nac_count,
        "min_braces_possible": verdict.min_braces_possible,
        "unbraced": verdict.unbraced,
    }
    if braced is not None:
        from .rigidity import bracing_graph

        payload["witnesses"] = [
            {"ribbons": list(pair), "cells": [list(c.vertices) for c in cells]}
            for pair, cells in sorted(bracing_graph(braced).edge_witnesses.items())
        ]
    return payload


def ribbons_payload(braced: BracedFramework) -> dict:
    partition = braced.pframework.partition
    return {
        "ribbon_of": {edge_map_key(e): rid for e, rid in partition.ribbon_of.items()},
        "ribbons": [
            {
                "id": r.id,
                "edges": [list(e) for e in r.edges],
                "simple": r.is_simple,
                "edge_cut": r.is_edge_cut,
                "braced_edges": [list(e) for e in braced.braced_ribbons[r.id]],
            }
            for r in partition.ribbons
        ],
    }


def coloring_payload(coloring) -> dict:
    return {edge_map_key(e): color for e, color in coloring.color_of.items()}


def refusal_payload(exc: SeparationViolated) -> dict:
    payload: dict[str, Any] = {
        "error": "separation_violated",
        "message": str(exc),
        "offending_ribbons": list(exc.offending_ribbons),
    }
    if exc.witness_pair is not None:
        payload["witness_pair"] = list(exc.witness_pair)
    if exc.blocked_vertices:
        payload["blocked_vertices"] = list(exc.blocked_vertices)
    return payload
