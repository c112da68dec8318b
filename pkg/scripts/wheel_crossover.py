#!/usr/bin/env python3
"""Certified sign table for the wheel family and the GA/ABC crossover point.

Usage:
    python scripts/wheel_crossover.py [--lo 4] [--hi 300] [--precision 256] [--workers 1]
"""

import argparse

from degix.families import wheel_closed_forms
from degix.indices import Sign
from degix.intervals import interval_json
from degix.theorems import crossover_scan


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=4)
    ap.add_argument("--hi", type=int, default=300)
    ap.add_argument("--precision", type=int, default=256)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    result = crossover_scan(args.lo, args.hi, args.precision, workers=args.workers)
    ga_wins = sum(1 for _, s in result.signs if s is Sign.GA_GREATER)
    abc_wins = sum(1 for _, s in result.signs if s is Sign.ABC_GREATER)
    print(f"orders {args.lo}..{args.hi}: GA ahead on {ga_wins}, ABC ahead on {abc_wins}")
    print(f"first certified flip to ABC: {result.first_flip}")
    if result.first_flip:
        for n in (result.first_flip - 1, result.first_flip):
            ga, abc = wheel_closed_forms(n, args.precision)
            gap = ga - abc
            print(f"  n={n}: GA-ABC in [{interval_json(gap)['lo']}, {interval_json(gap)['hi']}]")


if __name__ == "__main__":
    main()
