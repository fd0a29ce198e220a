"""Command-line interface.

Subcommands: ribbons, analyze, nac, flex, brace-min, gen, serve.  Input is a
framework document file or stdin ("-").  Exit codes: 0 success, 1 usage,
2 validation failure, 3 refusal (framework outside the rigidity theory).
Identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .coloring import enumerate_cartesian_nac
from .document import (
    canonical_json,
    coloring_payload,
    effective_eps,
    parse_framework,
    refusal_payload,
    ribbons_payload,
    serialize_framework,
    verdict_payload,
)
from .errors import BraceRigError, SchemaError, SeparationViolated, ValidationError
from .flexes import build_flex, export_animation
from .geometry import carpet_to_framework, generate_grid, generate_random_grec
from .rigidity import build_braced, minimal_brace_completion, rigidity_verdict

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_REFUSAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we reserve 2 for validation
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bracerig", description=__doc__)
    parser.add_argument("--format", choices=("json", "text"), default="text",
                        help="output format for reports and errors")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("ribbons", "ribbon table for a framework document"),
        ("analyze", "rigidity verdict for a framework document"),
        ("brace-min", "minimal brace completion for a framework document"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", nargs="?", default="-",
                       help="framework document path, or - for stdin")

    p = sub.add_parser("nac", help="cartesian NAC-colorings")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--all", action="store_true", help="list colorings, not just the count")

    p = sub.add_parser("flex", help="export a flex animation")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--coloring", type=int, default=0, help="coloring index")
    p.add_argument("--frames", type=int, default=24)
    p.add_argument("--t-range", type=float, nargs=2, default=(0.0, 6.283185307179586),
                   metavar=("T0", "T1"))
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--anim-format", choices=("json", "svg"), default="json")

    p = sub.add_parser("gen", help="generate a framework document")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    grid = gen_sub.add_parser("grid")
    grid.add_argument("size", help="AxB cells, e.g. 3x3")
    grec = gen_sub.add_parser("grec")
    grec.add_argument("steps", type=int)
    grec.add_argument("--seed", type=int, default=0)
    carpet = gen_sub.add_parser("carpet")
    carpet.add_argument("file", help="JSON array of parallelograms (4 corner points each)")

    p = sub.add_parser("serve", help="run the analysis HTTP service")
    p.add_argument("--port", type=int, default=8741)
    p.add_argument("--host", default="127.0.0.1")
    return parser


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as handle:
        return handle.read()


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.format == "json":
        sys.stdout.write(canonical_json(payload) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _cmd_ribbons(args) -> int:
    braced = parse_framework(_read_input(args.file))
    payload = ribbons_payload(braced)
    lines = ["id  size  simple  cut"]
    for ribbon in payload["ribbons"]:
        lines.append(f"{ribbon['id']:<3d} {len(ribbon['edges']):<5d} "
                     f"{str(ribbon['simple']).lower():<7s} {str(ribbon['edge_cut']).lower()}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    braced = parse_framework(_read_input(args.file))
    verdict = rigidity_verdict(braced)
    payload = verdict_payload(verdict, braced)
    lines = [
        f"status: {verdict.status}",
        f"ribbons: {len(braced.pframework.partition.ribbons)}",
        f"bracing components: {len(verdict.bracing_components)}",
        f"cartesian NAC-colorings: {verdict.cartesian_nac_count}",
        f"min braces for rigidity: {verdict.min_braces_possible}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_nac(args) -> int:
    braced = parse_framework(_read_input(args.file))
    verdict = rigidity_verdict(braced)
    if args.all:
        colorings = [coloring_payload(c) for c in enumerate_cartesian_nac(braced)]
        payload = {"count": len(colorings), "colorings": colorings}
        lines = [f"{i}: {canonical_json(c)}" for i, c in enumerate(colorings)] or ["none"]
    else:
        payload = {"count": verdict.cartesian_nac_count}
        lines = [str(verdict.cartesian_nac_count)]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_flex(args) -> int:
    braced = parse_framework(_read_input(args.file))
    verdict = rigidity_verdict(braced)
    if verdict.rigid:
        raise ValidationError("framework is rigid; no flex exists")
    if not 0 <= args.coloring < verdict.cartesian_nac_count:
        raise ValidationError(
            f"coloring index {args.coloring} out of range "
            f"(0..{verdict.cartesian_nac_count - 1})")
    coloring = None
    for i, candidate in enumerate(enumerate_cartesian_nac(braced)):
        if i == args.coloring:
            coloring = candidate
            break
    flex = build_flex(braced, coloring)
    data = export_animation(flex, args.frames, tuple(args.t_range), format=args.anim_format)
    with open(args.out, "wb") as handle:
        handle.write(data)
    sys.stdout.write(f"wrote {args.out}\n")
    return EXIT_OK


def _cmd_brace_min(args) -> int:
    braced = parse_framework(_read_input(args.file))
    result = minimal_brace_completion(braced)
    payload = {
        "added_braces": [list(b) for b in result.added_braces],
        "feasible": result.feasible,
    }
    if result.infeasible_reason:
        payload["infeasible_reason"] = result.infeasible_reason
        lines = [f"infeasible: {result.infeasible_reason}"]
    elif result.added_braces:
        lines = [f"add {u}-{v}" for u, v in result.added_braces]
    else:
        lines = ["already rigid"]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "grid":
        try:
            a_str, b_str = args.size.lower().split("x")
            a, b = int(a_str), int(b_str)
        except ValueError:
            raise _UsageError(f"grid size must look like 3x3, got {args.size!r}")
        pf = generate_grid(a, b, eps=effective_eps())
        metadata = {"name": f"grid{a}x{b}"}
    elif args.kind == "grec":
        pf = generate_random_grec(args.steps, args.seed, eps=effective_eps())
        metadata = {"name": f"grec{args.steps}", "seed": args.seed}
    else:
        import json as _json

        try:
            raw = _json.loads(_read_input(args.file))
        except _json.JSONDecodeError as exc:
            raise SchemaError(f"invalid carpet JSON: {exc}") from None
        if not isinstance(raw, list) or not raw:
            raise SchemaError("carpet must be a non-empty JSON array of parallelograms")
        pf = carpet_to_framework(raw, eps=effective_eps())
        metadata = {"name": "carpet"}
    braced = build_braced(pf, [])
    sys.stdout.buffer.write(serialize_framework(braced, metadata=metadata))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


_COMMANDS = {
    "ribbons": _cmd_ribbons,
    "analyze": _cmd_analyze,
    "nac": _cmd_nac,
    "flex": _cmd_flex,
    "brace-min": _cmd_brace_min,
    "gen": _cmd_gen,
    "serve": _cmd_serve,
}


def _emit_error(fmt: str, payload: dict, text: str) -> None:
    if fmt == "json":
        sys.stderr.write(canonical_json(payload) + "\n")
    else:
        sys.stderr.write(text + "\n")


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        _emit_error(fmt, {"error": "usage", "message": str(exc)}, f"usage error: {exc}")
        return EXIT_USAGE
    except SeparationViolated as exc:
        _emit_error(fmt, refusal_payload(exc), f"refused: {exc}")
        return EXIT_REFUSAL
    except SchemaError as exc:
        _emit_error(fmt, {"error": "schema", "message": str(exc), "path": exc.path},
                    f"schema error at {exc.path}: {exc}")
        return EXIT_VALIDATION
    except BraceRigError as exc:
        _emit_error(fmt, {"error": type(exc).__name__, "message": str(exc)},
                    f"validation error: {exc}")
        return EXIT_VALIDATION
    except OSError as exc:
        _emit_error(fmt, {"error": "io", "message": str(exc)}, f"i/o error: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
