#!/usr/bin/env python3
"""Stress decompose+verify over seeded unimodular conjugates of the fixtures.

Usage: python scripts/stress_conjugates.py [--count N] [--fixtures t6,t8,...]
Exits nonzero if any conjugate fails its certificate.
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
    parser.add_argument("--count", type=int, default=25)
    parser.add_argument("--fixtures", default=",".join(fx.ALL_FIXTURES))
    args = parser.parse_args()

    failures = 0
    for name in args.fixtures.split(","):
        base = fx.ALL_FIXTURES[name]()
        t0 = time.time()
        for seed in range(args.count):
            u = fx.conjugated(base, seed)
            try:
                dec = decompose(u, seed=seed)
                assert dec.certificate.accepted
            except Exception as exc:  # report and keep going
                failures += 1
                print(f"  {name} seed {seed}: {type(exc).__name__}: {exc}")
        print(f"{name:<11} {args.count} conjugates in {time.time() - t0:.1f}s")
    if failures:
        print(f"{failures} failures")
        return 1
    print("all conjugates decomposed and verified")
    return 0


if __name__ == "__main__":
    sys.exit(main())
