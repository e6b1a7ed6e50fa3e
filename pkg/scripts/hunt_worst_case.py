#!/usr/bin/env python3
"""Gather evidence on the swapping phase's worst-case growth.

Small sizes are swept exhaustively (every permutation, every selection
index); larger sizes are probed with seeded random sampling at the median
index. The script prints max swap compares normalized by n, the witness
for each size, and a log-log slope fitted to the maxima. A slope near 1
is consistent with the phase being linear in the worst case; nothing here
proves it.
"""

import argparse
import statistics
import math

from dualheap import (
    SelectOptions,
    emit_worstcase_csv,
    worst_case_search_exhaustive,
    worst_case_search_random,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8, help="exhaustive sweep bound (<= 9)")
    parser.add_argument("--random-sizes", default="63,255,1023,4095")
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--swap", default="tree", choices=("tree", "branch", "root"))
    parser.add_argument("--presplit", type=int, default=1, choices=(0, 1, 2))
    parser.add_argument("--out", default=None, help="also write the reports as CSV")
    args = parser.parse_args()

    opts = SelectOptions(strategy=args.swap, presplit=args.presplit)
    reports = worst_case_search_exhaustive(args.max_n, opts)
    print(f"exhaustive sweep (strategy={args.swap}, presplit={args.presplit}):")
    print(f"{'n':>6} {'instances':>12} {'max swap cmp':>14} {'max/n':>8}  witness")
    for r in reports:
        print(
            f"{r.n:>6} {r.instances_tested:>12} {r.max_compares_swap:>14} "
            f"{r.max_compares_swap / r.n:>8.2f}  perm={list(r.argmax_permutation)} k={r.argmax_k}"
        )

    random_sizes = tuple(int(part) for part in args.random_sizes.split(","))
    print(f"\nrandom probing ({args.samples} samples per size, k=median):")
    print(f"{'n':>6} {'max swap cmp':>14} {'max/n':>8}  witness seed")
    for n in random_sizes:
        r = worst_case_search_random(n, args.samples, args.seed, opts=opts)
        reports.append(r)
        print(f"{r.n:>6} {r.max_compares_swap:>14} {r.max_compares_swap / r.n:>8.2f}  {r.argmax_seed}")

    xs = [math.log(r.n) for r in reports]
    ys = [math.log(r.max_compares_swap) for r in reports]
    slope = statistics.linear_regression(xs, ys).slope
    print(f"\nlog-log slope of maxima across all probed sizes: {slope:.3f}")

    if args.out:
        emit_worstcase_csv(reports, args.out)
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
