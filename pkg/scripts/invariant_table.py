#!/usr/bin/env python3
"""Print a closed-form invariant table over a (p, n) grid.

Everything here is formula-only, so the grid can go far beyond what the
graph oracles could materialize.
"""

import argparse

from fibpcubes.graph import total_edges_closed
from fibpcubes.invariants import irregularity_closed, mostar_closed, wiener_closed
from fibpcubes.sequences import pfib


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=12)
    args = parser.parse_args()

    header = f"{'p':>2} {'n':>3} {'|V|':>12} {'|E|':>14} {'W':>20} {'Mo':>18} {'irr':>14}"
    print(header)
    print("-" * len(header))
    for p in range(args.p_max + 1):
        for n in range(args.n_max + 1):
            irr = irregularity_closed(p, n) if n >= p else "-"
            print(
                f"{p:>2} {n:>3} {pfib(p, n + p + 1):>12} "
                f"{total_edges_closed(p, n):>14} {wiener_closed(p, n):>20} "
                f"{mostar_closed(p, n):>18} {irr:>14}"
            )
        print()


if __name__ == "__main__":
    main()
