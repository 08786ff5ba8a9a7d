#!/usr/bin/env python3
"""Sweep balanced curve-counting problems and tally the d^r structure.

For every balanced condition multiset over the Schubert basis (up to the
given insertion count and degree), solve the count problem and verify that
the invariant is d^r times the curve count, and that appending one extra
codimension-one condition scales the invariant by d while leaving the curve
count alone.  Prints one summary row per (space, degree).
"""

import argparse
from itertools import combinations_with_replacement

from qschub.counting import CountProblem, rational_curve_count
from qschub.errors import NotComputableError
from qschub.partitions import weight
from qschub.spaces import parse_space


def sweep(space, degree, max_conditions):
    solved = violations = skipped = 0
    interesting = []
    for s in range(1, max_conditions + 1):
        target = space.moduli_dimension(s, degree)
        for combo in combinations_with_replacement(space.basis(), s):
            if sum(weight(p) for p in combo) != target:
                continue
            try:
                base = rational_curve_count(CountProblem(space, degree, combo))
                more = rational_curve_count(CountProblem(space, degree, combo + ((1,),)))
            except NotComputableError:
                skipped += 1
                continue
            solved += 1
            if (
                base.gw_value != degree**base.divisor_conditions * base.curve_count
                or more.gw_value != degree * base.gw_value
                or more.curve_count != base.curve_count
            ):
                violations += 1
            if base.curve_count > 1:
                interesting.append((combo, base))
    return solved, violations, skipped, interesting


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--spaces", nargs="+", default=["G(2,4)", "G(2,5)", "G(1,3)"])
    parser.add_argument("--max-degree", type=int, default=3)
    parser.add_argument("--max-conditions", type=int, default=5)
    parser.add_argument("--show-counts", action="store_true",
                        help="also print every problem with more than one curve")
    args = parser.parse_args()

    print(f"{'space':>8} {'d':>2} {'solved':>7} {'violations':>10} {'skipped':>8}")
    for text in args.spaces:
        space = parse_space(text)
        for degree in range(1, args.max_degree + 1):
            solved, violations, skipped, interesting = sweep(
                space, degree, args.max_conditions
            )
            print(f"{space.notation:>8} {degree:>2} {solved:>7} {violations:>10} {skipped:>8}")
            if args.show_counts:
                for combo, result in interesting:
                    conds = " ".join("0" if not p else ",".join(map(str, p)) for p in combo)
                    print(
                        f"    [{conds}]  GW = {result.gw_value}, "
                        f"r = {result.divisor_conditions}, curves = {result.curve_count}"
                    )


if __name__ == "__main__":
    main()
