#!/usr/bin/env python3
"""Fuzz the saturation solver against the grammar engine and the bounded
walk oracle on random labeled graphs.

Usage: python3 scripts/engine_fuzz.py [--samples N] [--seed S]
                                      [--max-vertices V] [--pairs P]
"""

import argparse
import os
import random
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from dycklab import (EnumerationBudget, brute_dyck_reach, dyck_grammar,
                     solve_cfl, solve_dyck, solve_dyck_wrap_only)
from util import random_dyck_instance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vertices", type=int, default=10)
    ap.add_argument("--pairs", type=int, default=2)
    ap.add_argument("--oracle-len", type=int, default=8,
                    help="walk-length budget for the brute-force check")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    grammar = dyck_grammar(args.pairs)
    gaps = 0
    t0 = time.monotonic()
    for i in range(args.samples):
        inst = random_dyck_instance(rng, max_vertices=args.max_vertices,
                                    pairs=args.pairs,
                                    density=rng.uniform(0.05, 0.4))
        full = solve_dyck(inst)
        if full.pairs != solve_cfl(inst, grammar)["S"]:
            print(f"MISMATCH sample {i}: saturation vs grammar engine")
            return 1
        brute = brute_dyck_reach(inst, EnumerationBudget(args.oracle_len))
        if not brute <= full.pairs:
            print(f"MISMATCH sample {i}: oracle found a pair the solver missed")
            return 1
        if not solve_dyck_wrap_only(inst).pairs <= full.pairs:
            print(f"MISMATCH sample {i}: wrap-only exceeded the full solver")
            return 1
        gaps += full.pairs != solve_dyck_wrap_only(inst).pairs
    dt = time.monotonic() - t0
    print(f"{args.samples} instances, 0 mismatches, "
          f"{gaps} wrap-only gaps, {dt:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
