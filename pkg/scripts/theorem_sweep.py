#!/usr/bin/env python3
"""Exhaustive theorem consistency sweep over all small connected graphs.

Checks every implemented statement on every connected graph up to the given
order: whenever a hypothesis holds, the conclusion must be certified.  A
falsification aborts with a nonzero exit.

Usage:
    python scripts/theorem_sweep.py [--max-n 7] [--precision 128] [--workers 1] [--out report.json]
"""

import argparse
import json
from collections import Counter

from degix.search import enumerate_connected
from degix.theorems import consistency_sweep, report_json


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--precision", type=int, default=128)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write the full report list as JSON")
    args = ap.parse_args()

    graphs = [g for n in range(1, args.max_n + 1) for g in enumerate_connected(n)]
    print(f"{len(graphs)} connected graphs up to order {args.max_n}")
    reports = consistency_sweep(graphs, args.precision, workers=args.workers)

    held = Counter(r.theorem.value for r in reports if r.hypothesis_holds)
    print(f"{len(reports)} reports, all consistent")
    for theorem, count in sorted(held.items()):
        print(f"  {theorem:>16}: hypothesis held on {count} graphs, conclusion certified")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([report_json(r) for r in reports], fh, indent=2)
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
