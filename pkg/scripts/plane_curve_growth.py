#!/usr/bin/env python3
"""Print the rational plane curve counts N_d with growth statistics.

Besides the raw ratio N_d / N_{d-1}, the table shows the same ratio for the
normalized sequence f_d = N_d / (3d-1)!  (each curve passes through 3d-1
points, so dividing by the matching factorial strips the bulk of the
combinatorial growth; the normalized ratio settles down much faster).
"""

import argparse
import time
from math import factorial

from qschub.plane_curves import nd_values, reset_cache


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--upto", type=int, default=20)
    args = parser.parse_args()

    reset_cache()
    start = time.perf_counter()
    values = nd_values(args.upto)
    elapsed = time.perf_counter() - start

    print(f"{'d':>3} {'N_d':>42} {'ratio':>14} {'normalized':>11}")
    table = dict(values)
    for d, n in values:
        if d >= 2 and table[d - 1]:
            ratio = n / table[d - 1]
            normalized = (n / factorial(3 * d - 1)) / (
                table[d - 1] / factorial(3 * d - 4)
            )
            print(f"{d:>3} {n:>42} {ratio:>14.3f} {normalized:>11.5f}")
        else:
            print(f"{d:>3} {n:>42} {'-':>14} {'-':>11}")
    print(f"\ncomputed {args.upto} values in {elapsed * 1000:.2f} ms (cold cache)")


if __name__ == "__main__":
    main()
