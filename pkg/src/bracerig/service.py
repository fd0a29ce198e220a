"""Stateless HTTP JSON API wrapping the analysis pipeline.

Every request carries the full framework document; the service keeps no
state, so any request order yields the same per-request responses and
requests may be handled concurrently.  Status codes: 400 malformed JSON or
wrong content type, 413 oversized body, 422 schema/validation failure,
409 refusal (framework outside the rigidity theory) or flex of a rigid
framework, 404 unknown coloring index.
"""

from __future__ import annotations

import json
import math
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .coloring import enumerate_cartesian_nac
from .document import (
    _canonicalize,
    braced_to_document,
    coloring_payload,
    document_to_braced,
    effective_eps,
    parse_document,
    refusal_payload,
    ribbons_payload,
    serialize_document,
    verdict_payload,
)
from .errors import (
    BraceRigError,
    SchemaError,
    SeparationViolated,
    ValidationError,
)
from .flexes import build_flex, sample_flex
from .geometry import carpet_to_framework, generate_grid, generate_random_grec
from .rigidity import BracedFramework, bracing_graph, build_braced, \
    minimal_brace_completion, ribbon_graph, rigidity_verdict

MAX_BODY_BYTES = 1_000_000


def _json_response(payload, status_code: int = 200) -> JSONResponse:
    return JSONResponse(content=_canonicalize(payload), status_code=status_code)


def _error(status_code: int, error: str, message: str, **extra) -> JSONResponse:
    return _json_response({"error": error, "message": message, **extra}, status_code)


async def _read_json_body(request: Request):
    content_type = request.headers.get("content-type", "")
    if content_type.split(";")[0].strip() != "application/json":
        return None, _error(400, "content_type", "content type must be application/json")
    body = await request.body()
    if len(body) > MAX_BODY_BYTES:
        return None, _error(413, "too_large",
                            f"request body exceeds {MAX_BODY_BYTES} bytes")
    try:
        return json.loads(body), None
    except json.JSONDecodeError as exc:
        return None, _error(400, "malformed_json", str(exc))


def _analyze_payload(braced: BracedFramework) -> dict:
    verdict = rigidity_verdict(braced)
    full = ribbon_graph(braced)
    graph_b = bracing_graph(braced)
    completion = minimal_brace_completion(braced)
    return {
        "verdict": verdict_payload(verdict, braced),
        **ribbons_payload(braced),
        "ribbon_graph": {
            "vertices": list(full.vertices),
            "edges": [list(e) for e in full.edges],
        },
        "bracing_graph": {
            "vertices": list(graph_b.vertices),
            "edges": [list(e) for e in graph_b.edges],
            "components": [list(c) for c in graph_b.components()],
        },
        "four_cycles": [list(c.vertices) for c in braced.pframework.graph.four_cycles],
        "braces": [list(b) for b in braced.braces],
        "cartesian_nac_count": verdict.cartesian_nac_count,
        "min_braces_possible": verdict.min_braces_possible,
        "completion_suggestion": [list(b) for b in completion.added_braces],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="bracerig", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST", "OPTIONS"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    async def health():
        return _json_response({"status": "ok", "version": __version__})

    @app.post("/api/analyze")
    async def analyze(request: Request):
        raw, failure = await _read_json_body(request)
        if failure is not None:
            return failure
        try:
            braced = document_to_braced(parse_document_raw(raw))
        except SchemaError as exc:
            return _error(422, "schema", str(exc), path=exc.path)
        except ValidationError as exc:
            return _error(422, "validation", str(exc))
        try:
            return _json_response(_analyze_payload(braced))
        except SeparationViolated as exc:
            return _json_response(refusal_payload(exc), status_code=409)

    @app.post("/api/flex")
    async def flex(request: Request):
        raw, failure = await _read_json_body(request)
        if failure is not None:
            return failure
        if not isinstance(raw, dict) or "framework" not in raw:
            return _error(422, "schema", "body must hold a 'framework' document")
        coloring_index = raw.get("coloring", 0)
        frames = raw.get("frames", 24)
        t_range = raw.get("t_range", [0.0, 2.0 * math.pi])
        if not (isinstance(coloring_index, int) and isinstance(frames, int)
                and isinstance(t_range, list) and len(t_range) == 2
                and all(isinstance(t, (int, float)) for t in t_range)):
            return _error(422, "schema", "bad coloring/frames/t_range parameters")
        if frames < 2:
            return _error(422, "schema", "need at least two frames")
        try:
            braced = document_to_braced(parse_document_raw(raw["framework"]))
            verdict = rigidity_verdict(braced)
        except SchemaError as exc:
            return _error(422, "schema", str(exc), path=exc.path)
        except ValidationError as exc:
            return _error(422, "validation", str(exc))
        except SeparationViolated as exc:
            return _json_response(refusal_payload(exc), status_code=409)
        if verdict.rigid:
            return _error(409, "rigid", "framework is rigid; no flex exists")
        if not 0 <= coloring_index < verdict.cartesian_nac_count:
            return _error(404, "unknown_coloring",
                          f"coloring index {coloring_index} out of range "
                          f"(0..{verdict.cartesian_nac_count - 1})")
        chosen = None
        for i, coloring in enumerate(enumerate_cartesian_nac(braced)):
            if i == coloring_index:
                chosen = coloring
                break
        flex_obj = build_flex(braced, chosen)
        t0, t1 = float(t_range[0]), float(t_range[1])
        ts = [t0 + i * (t1 - t0) / (frames - 1) for i in range(frames)]
        frame_list = []
        for t in ts:
            placed = sample_flex(flex_obj, t)
            frame_list.append({v: [placed.coords[v][0], placed.coords[v][1]]
                               for v in sorted(placed.coords)})
        return _json_response({
            "t_values": ts,
            "frames": frame_list,
            "coloring": coloring_payload(chosen),
            "base_vertex": flex_obj.base_vertex,
        })

    @app.post("/api/generate")
    async def generate(request: Request):
        raw, failure = await _read_json_body(request)
        if failure is not None:
            return failure
        if not isinstance(raw, dict):
            return _error(400, "bad_params", "body must be a JSON object")
        kind = raw.get("kind")
        try:
            if kind == "grid":
                a, b = int(raw.get("a", 3)), int(raw.get("b", 3))
                pf = generate_grid(a, b, eps=effective_eps())
                metadata = {"name": f"grid{a}x{b}"}
            elif kind == "grec":
                steps = int(raw.get("steps", 10))
                seed = int(raw.get("seed", 0))
                pf = generate_random_grec(steps, seed, eps=effective_eps())
                metadata = {"name": f"grec{steps}", "seed": seed}
            elif kind == "carpet":
                cells = raw.get("parallelograms")
                if not isinstance(cells, list) or not cells:
                    return _error(400, "bad_params",
                                  "carpet needs a non-empty 'parallelograms' array")
                pf = carpet_to_framework(cells, eps=effective_eps())
                metadata = {"name": "carpet"}
            else:
                return _error(400, "bad_params", f"unknown kind {kind!r}")
        except (TypeError, ValueError) as exc:
            return _error(400, "bad_params", str(exc))
        except BraceRigError as exc:
            return _error(422, "validation", f"{type(exc).__name__}: {exc}")
        braced = build_braced(pf, [])
        doc = braced_to_document(braced, metadata=metadata)
        return _json_response(json.loads(serialize_document(doc)))

    return app


def parse_document_raw(raw):
    """Parse an already-decoded JSON object through the schema checks."""
    return parse_document(json.dumps(raw))


app = create_app()
