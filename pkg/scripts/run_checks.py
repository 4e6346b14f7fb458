#!/usr/bin/env python3
"""Run every closed-form vs oracle suite over a desk-scale grid.

A thin driver over the verification module, with per-suite timing; exits
nonzero on the first failing suite so it can sit in CI.
"""

import argparse
import sys
import time

from fibpcubes.verify import run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--order", type=int, default=20)
    args = parser.parse_args()

    ps = list(range(args.p_max + 1))
    ns = list(range(args.n_max + 1))
    failures = 0
    for suite in ("cubes", "gf", "indices", "irregularity"):
        start = time.perf_counter()
        results = run_suite(suite, ps, ns, order=args.order)
        elapsed = time.perf_counter() - start
        bad = [r for r in results if not r.passed]
        failures += len(bad)
        print(f"{suite:>13}: {len(results) - len(bad)}/{len(results)} "
              f"passed in {elapsed:.2f}s")
        for r in bad:
            print(f"    FAIL {r.name}: {r.detail}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
