#!/usr/bin/env python3
"""Nonequality scan: certify GA != ABC over exhaustive small-graph streams.

Scans all connected graphs up to --max-n vertices plus all trees up to
--trees-max-n, reporting the smallest certified |GA - ABC| seen and any
graph whose sign stayed indeterminate at the precision ceiling (conjecture
candidates for follow-up).

Usage:
    python scripts/conjecture_scan.py [--max-n 7] [--trees-max-n 12] [--precision 256] [--workers 1]
"""

import argparse
import json
import sys

from degix.search import enumerate_connected, enumerate_trees, scan_conjecture, scan_result_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--trees-max-n", type=int, default=12)
    ap.add_argument("--precision", type=int, default=256)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    stream = [g for n in range(2, args.max_n + 1) for g in enumerate_connected(n)]
    stream += [
        t
        for n in range(max(2, args.max_n + 1), args.trees_max_n + 1)
        for t in enumerate_trees(n)
    ]
    result = scan_conjecture(stream, args.precision, workers=args.workers)
    print(json.dumps(scan_result_json(result), indent=2))
    if result.violations:
        print("CERTIFIED EQUALITY FOUND: the nonequality conjecture is falsified",
              file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
