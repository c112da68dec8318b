#!/usr/bin/env python3
"""Certified verdicts for the sharpness examples around the degree-gap bound.

Prints the exceptional trees (K_{1,4} and the double claw), the bipartite
graphs K_{delta, (2*delta-1)^2 + delta + 1} where the gap bound fails by one
and ABC overtakes GA, and the clique-bridge graph where the gap bound fails
by more yet GA still wins.

Usage:
    python scripts/boundary_examples.py [--precision 256]
"""

import argparse

from degix.families import FamilyKind, FamilySpec, boundary_bipartite, generate
from degix.graphs import degree_stats
from degix.indices import compare_ga_abc
from degix.intervals import decimal_str


def show(label: str, g, precision: int) -> None:
    stats = degree_stats(g)
    verdict = compare_ga_abc(g, precision)
    mid = decimal_str(verdict.gap.midpoint(), 6, "nearest")
    print(
        f"{label:>14}: n={g.n:>3} m={g.m:>3} degree gap={stats.delta_max - stats.delta_min:>3} "
        f"-> {verdict.sign.value:<12} GA-ABC ~ {mid}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--precision", type=int, default=256)
    args = ap.parse_args()

    show("K_{1,4}", generate(FamilySpec(FamilyKind.STAR, (4,))), args.precision)
    show("double claw", generate(FamilySpec(FamilyKind.T_STAR)), args.precision)
    for delta in range(2, 7):
        s = (2 * delta - 1) ** 2 + delta + 1
        show(f"K_{{{delta},{s}}}", boundary_bipartite(delta), args.precision)
    show("K12-K3 bridge", generate(FamilySpec(FamilyKind.CLIQUE_BRIDGE, (12, 3))), args.precision)


if __name__ == "__main__":
    main()
