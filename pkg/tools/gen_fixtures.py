#!/usr/bin/env python3
"""Regenerate the framework documents under fixtures/ from the built-in catalog."""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from bracerig.document import serialize_framework
from bracerig.instances import CATALOG
from bracerig.rigidity import build_braced

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    for name, builder in sorted(CATALOG.items()):
        pf, braces = builder()
        braced = build_braced(pf, braces)
        path = FIXTURES / f"{name}.json"
        path.write_bytes(serialize_framework(braced, metadata={"name": name}))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
