from __future__ import annotations

import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

from bracerig import instances
from bracerig.geometry import generate_grid, generate_random_grec
from bracerig.rigidity import build_braced

FIXTURES_DIR = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def braced_corpus():
    """Small braced frameworks used by cross-cutting property tests."""
    c4 = generate_grid(1, 1)
    entries = [
        ("c4_unbraced", build_braced(c4, [])),
        ("c4_braced", build_braced(c4, [("v0_0", "v1_1")])),
        ("grid2x1", build_braced(generate_grid(2, 1), [])),
        ("grid2x2", build_braced(generate_grid(2, 2), [])),
        ("grid2x2_one_brace", build_braced(generate_grid(2, 2), [("v0_0", "v1_1")])),
        ("strip_flap", build_braced(instances.strip_flap(), ())),
        ("strip_flap_braced", build_braced(instances.strip_flap(), [("a", "c")])),
        ("fan6", build_braced(instances.fan6(), ())),
        ("mesh_quad", build_braced(*instances.mesh_quad_braced())),
        ("hub_rigid", build_braced(*instances.hub_mesh_rigid())),
        ("hub_flexible", build_braced(*instances.hub_mesh_flexible())),
        ("grid3x3_rigid", build_braced(*instances.grid3x3_rigid())),
        ("grid3x3_flexible", build_braced(*instances.grid3x3_flexible())),
        ("grec12", build_braced(generate_random_grec(12, seed=3), [])),
    ]
    return entries


@pytest.fixture(scope="session")
def corpus():
    return braced_corpus()


@pytest.fixture(scope="session")
def pframework_corpus(corpus):
    seen = {}
    for name, braced in corpus:
        seen.setdefault(id(braced.pframework), (name, braced.pframework))
    return [v for v in seen.values()]
