#!/usr/bin/env python3
"""Regenerate the bundled .alg fixture files from their programmatic builders."""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from baralt import fixtures as fx
from baralt.files import algebra_to_text

DESCRIPTIONS = {
    "t1": "one-dimensional baric algebra F·u",
    "t2": "adjoined unit over the 2x2 matrix units",
    "t3": "adjoined unit over upper-triangular 2x2 matrices",
    "t4": "truncated polynomial algebra F[x]/(x^8)",
    "t5": "adjoined unit over M2 plus an annihilator line",
    "t6": "adjoined unit over M2 plus a square-zero regular bimodule",
    "t7": "two-dimensional non-unital baric algebra with a one-sided action",
    "t8": "adjoined unit over the split Cayley algebra plus a square-zero regular bimodule",
    "t9": "non-unital subalgebra of the split Cayley algebra with a one-sided idempotent",
    "zorn_baric": "adjoined unit over the split Cayley (Zorn vector-matrix) algebra",
}


def main():
    outdir = ROOT / "fixtures"
    outdir.mkdir(exist_ok=True)
    for name, ctor in fx.ALL_FIXTURES.items():
        text = algebra_to_text(ctor(), {"name": name, "description": DESCRIPTIONS[name]})
        (outdir / f"{name}.alg").write_text(text)
        print(f"wrote {name}.alg ({len(text)} bytes)")
    text = algebra_to_text(
        fx.t2_f7(), {"name": "t2_f7", "description": "t2 over the prime field F_7"}
    )
    (outdir / "t2_f7.alg").write_text(text)
    print(f"wrote t2_f7.alg ({len(text)} bytes)")


if __name__ == "__main__":
    main()
