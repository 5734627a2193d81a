#!/usr/bin/env python
"""Run the full 16x6 property audit and print the grid plus discrepancies."""

import argparse
import json
import sys
import time

from paramat.audit import AuditBudget, run_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--letters", type=int, default=3)
    ap.add_argument("--gamma-size", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    args = ap.parse_args()
    budget = AuditBudget(
        samples=args.samples,
        depth=args.depth,
        letters=args.letters,
        gamma_size=args.gamma_size,
        seed=args.seed,
    )
    start = time.perf_counter()
    report = run_table(budget)
    elapsed = time.perf_counter() - start
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        print(report.format_text())
        print(f"\ncomputed in {elapsed:.1f}s")
    return 1 if report.unexpected_discrepancies() else 0


if __name__ == "__main__":
    sys.exit(main())
