#!/usr/bin/env python3
"""Decompose every bundled fixture and print a one-line report per algebra.

Usage: python scripts/decompose_all.py [--seed N] [--search-bound B]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from baralt import fixtures as fx
from baralt.wedderburn import decompose


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--search-bound", type=int, default=3)
    args = parser.parse_args()

    total = time.time()
    for name, ctor in fx.ALL_FIXTURES.items():
        u = ctor()
        t0 = time.time()
        dec = decompose(u, seed=args.seed, search_bound=args.search_bound)
        status = "accepted" if dec.certificate.accepted else "REJECTED"
        print(
            f"{name:<11} dim {u.dim:>2}: S={dec.s_basis.dim:>2} V={dec.v_basis.dim} "
            f"rad={dec.rad_basis.dim} certificate {status} [{time.time() - t0:.2f}s]"
        )
    print(f"total {time.time() - total:.2f}s")


if __name__ == "__main__":
    main()
