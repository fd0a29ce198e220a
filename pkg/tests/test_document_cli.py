from __future__ import annotations

import json
import os
import subprocess
import sys

import pytest

from bracerig.document import (
    canonical_json,
    parse_document,
    parse_framework,
    serialize_framework,
)
from bracerig.errors import SchemaError, ValidationError
from bracerig.cli import cli_main
from conftest import FIXTURES_DIR

C4_DOC = {
    "schema_version": 1,
    "vertices": [
        {"id": "a", "x": 0.0, "y": 0.0},
        {"id": "b", "x": 1.0, "y": 0.0},
        {"id": "c", "x": 1.0, "y": 1.0},
        {"id": "d", "x": 0.0, "y": 1.0},
    ],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
    "braces": [],
}


def doc_bytes(payload) -> bytes:
    return json.dumps(payload).encode()


# --- parsing ------------------------------------------------------------------

def test_parse_c4_round_trip():
    braced = parse_framework(doc_bytes(C4_DOC))
    assert braced.pframework.graph.vertices == ("a", "b", "c", "d")
    first = serialize_framework(braced)
    second = serialize_framework(parse_framework(first))
    assert first == second


def test_parse_rejects_nan():
    bad = json.dumps(C4_DOC).replace("0.0", "NaN", 1)
    with pytest.raises(SchemaError):
        parse_document(bad)


def test_parse_rejects_brace_that_is_edge():
    payload = dict(C4_DOC, braces=[["a", "b"]])
    with pytest.raises(ValidationError) as err:
        parse_framework(doc_bytes(payload))
    assert "BraceIsStructuralEdge" in str(err.value)


def test_parse_rejects_duplicate_ids():
    payload = dict(C4_DOC)
    payload["vertices"] = C4_DOC["vertices"] + [{"id": "a", "x": 5.0, "y": 5.0}]
    with pytest.raises(SchemaError) as err:
        parse_document(doc_bytes(payload))
    assert err.value.path == "/vertices"


def test_parse_rejects_bad_id_syntax():
    payload = dict(C4_DOC)
    payload["vertices"] = [{"id": "a,b", "x": 0.0, "y": 0.0}] + C4_DOC["vertices"][1:]
    with pytest.raises(SchemaError) as err:
        parse_document(doc_bytes(payload))
    assert err.value.path == "/vertices/0/id"


def test_parse_rejects_unknown_keys():
    payload = dict(C4_DOC, surprise=1)
    with pytest.raises(SchemaError):
        parse_document(doc_bytes(payload))


def test_parse_rejects_wrong_schema_version():
    payload = dict(C4_DOC, schema_version=2)
    with pytest.raises(SchemaError) as err:
        parse_document(doc_bytes(payload))
    assert err.value.path == "/schema_version"


def test_parse_rejects_malformed_json():
    with pytest.raises(SchemaError):
        parse_document(b"{not json")


def test_parse_rejects_disconnected():
    payload = dict(C4_DOC)
    payload["vertices"] = C4_DOC["vertices"] + [{"id": "z", "x": 9.0, "y": 9.0}]
    with pytest.raises(ValidationError) as err:
        parse_framework(doc_bytes(payload))
    assert "DisconnectedGraph" in str(err.value)


def test_eps_env_override(monkeypatch):
    # a sloppy placement accepted only under a loose tolerance
    payload = dict(C4_DOC)
    payload["vertices"] = [
        {"id": "a", "x": 0.0, "y": 0.0},
        {"id": "b", "x": 1.0, "y": 0.0},
        {"id": "c", "x": 1.0, "y": 1.0},
        {"id": "d", "x": 0.0001, "y": 1.0},
    ]
    with pytest.raises(ValidationError):
        parse_framework(doc_bytes(payload))
    monkeypatch.setenv("BRACE_RIG_EPS", "0.01")
    braced = parse_framework(doc_bytes(payload))
    assert braced.pframework.eps == 0.01


def test_canonical_json_floats():
    assert canonical_json({"x": 0.30000000000000004}) == '{"x":0.3}'
    assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'


# --- fixtures -------------------------------------------------------------------

FIXTURE_VERDICTS = {
    "fan6.json": "Flexible",
    "grid3x3_flexible.json": "Flexible",
    "grid3x3_rigid.json": "Rigid",
    "hub_braced_connected.json": "Rigid",
    "hub_braced_split.json": "Flexible",
    "mesh_quad_braced.json": "Flexible",
    "strip_flap.json": "Flexible",
}


def test_every_fixture_parses_and_reproduces_verdict():
    from bracerig.rigidity import rigidity_verdict

    names = sorted(p.name for p in FIXTURES_DIR.glob("*.json"))
    assert set(FIXTURE_VERDICTS) | {"grid5x4_gap.json"} == set(names)
    for name in names:
        raw = (FIXTURES_DIR / name).read_bytes()
        braced = parse_framework(raw)
        assert serialize_framework(
            braced, metadata=braced_metadata(raw)) == raw
        if name == "grid5x4_gap.json":
            from bracerig.errors import SeparationViolated

            with pytest.raises(SeparationViolated):
                rigidity_verdict(braced)
        else:
            assert rigidity_verdict(braced).status == FIXTURE_VERDICTS[name]


def braced_metadata(raw: bytes):
    return json.loads(raw).get("metadata")


def test_fixtures_match_builtin_catalog():
    from bracerig.instances import CATALOG
    from bracerig.rigidity import build_braced

    for name, builder in CATALOG.items():
        pf, braces = builder()
        expected = serialize_framework(build_braced(pf, braces),
                                       metadata={"name": name})
        assert (FIXTURES_DIR / f"{name}.json").read_bytes() == expected


# --- CLI ------------------------------------------------------------------------

def run_cli(args, stdin: bytes = b"", env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run(
        [sys.executable, "-m", "bracerig.cli", *args],
        input=stdin, capture_output=True, env=merged)


def test_cli_gen_analyze_pipeline():
    gen = run_cli(["gen", "grid", "3x3"])
    assert gen.returncode == 0
    analyze = run_cli(["--format", "json", "analyze", "-"], stdin=gen.stdout)
    assert analyze.returncode == 0
    payload = json.loads(analyze.stdout)
    assert payload["status"] == "Flexible"
    assert payload["min_braces_possible"] == 5
    assert len(payload["bracing_components"]) == 6


def test_cli_analyze_rigid_fixture():
    result = run_cli(["analyze", str(FIXTURES_DIR / "grid3x3_rigid.json")])
    assert result.returncode == 0
    assert b"status: Rigid" in result.stdout


def test_cli_refusal_exit_code_and_diagnostic():
    result = run_cli(["--format", "json", "analyze",
                      str(FIXTURES_DIR / "grid5x4_gap.json")])
    assert result.returncode == 3
    payload = json.loads(result.stderr)
    assert payload["error"] == "separation_violated"
    assert payload["offending_ribbons"] == [2, 4, 5, 6, 7, 9]


def test_cli_validation_exit_code():
    bad = json.dumps(dict(C4_DOC, braces=[["a", "b"]])).encode()
    result = run_cli(["analyze", "-"], stdin=bad)
    assert result.returncode == 2


def test_cli_usage_exit_code():
    result = run_cli(["gen", "grid", "3by3"])
    assert result.returncode == 1


def test_cli_ribbons_table():
    result = run_cli(["ribbons", str(FIXTURES_DIR / "strip_flap.json")])
    assert result.returncode == 0
    lines = result.stdout.decode().strip().splitlines()
    assert lines[0].split() == ["id", "size", "simple", "cut"]
    assert len(lines) == 6


def test_cli_nac_count_and_all():
    count = run_cli(["nac", str(FIXTURES_DIR / "hub_braced_split.json")])
    assert count.stdout.strip() == b"6"
    full = run_cli(["--format", "json", "nac", "--all",
                    str(FIXTURES_DIR / "hub_braced_split.json")])
    payload = json.loads(full.stdout)
    assert payload["count"] == 6
    assert len(payload["colorings"]) == 6
    assert all(set(c.values()) == {"red", "blue"} for c in payload["colorings"])


def test_cli_flex_export(tmp_path):
    out = tmp_path / "motion.json"
    result = run_cli(["flex", str(FIXTURES_DIR / "grid3x3_flexible.json"),
                      "--coloring", "0", "--frames", "5", "--out", str(out)])
    assert result.returncode == 0
    payload = json.loads(out.read_bytes())
    assert len(payload["frames"]) == 5


def test_cli_flex_rejects_rigid():
    result = run_cli(["flex", str(FIXTURES_DIR / "grid3x3_rigid.json"),
                      "--out", "/tmp/nope.json"])
    assert result.returncode == 2


def test_cli_brace_min():
    result = run_cli(["--format", "json", "brace-min",
                      str(FIXTURES_DIR / "grid3x3_flexible.json")])
    payload = json.loads(result.stdout)
    assert payload["feasible"] and len(payload["added_braces"]) == 1


def test_cli_gen_grec_deterministic():
    one = run_cli(["gen", "grec", "15", "--seed", "9"])
    two = run_cli(["gen", "grec", "15", "--seed", "9"])
    assert one.stdout == two.stdout


def test_cli_gen_carpet(tmp_path):
    carpet = tmp_path / "carpet.json"
    carpet.write_text(json.dumps([
        [[0, 0], [1, 0], [1, 1], [0, 1]],
        [[1, 0], [2, 0], [2, 1], [1, 1]],
    ]))
    result = run_cli(["gen", "carpet", str(carpet)])
    assert result.returncode == 0
    doc = json.loads(result.stdout)
    assert len(doc["vertices"]) == 6


def test_cli_byte_identical_reruns():
    for args in (["--format", "json", "analyze",
                  str(FIXTURES_DIR / "hub_braced_split.json")],
                 ["ribbons", str(FIXTURES_DIR / "fan6.json")]):
        assert run_cli(args).stdout == run_cli(args).stdout


def test_cli_main_inprocess_exit_codes(capsys):
    assert cli_main(["analyze", str(FIXTURES_DIR / "grid3x3_rigid.json")]) == 0
    capsys.readouterr()
    assert cli_main(["analyze", str(FIXTURES_DIR / "grid5x4_gap.json")]) == 3
    capsys.readouterr()
    assert cli_main(["analyze", "/nonexistent/file.json"]) == 1
    capsys.readouterr()
