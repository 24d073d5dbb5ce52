#!/usr/bin/env python3
"""Run every corpus check over the bundled corpora and print a summary table.

Usage:
    python scripts/run_sweeps.py [--max-n 8] [--jobs N] [--csv out.csv]
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time

from chromabound.lab import CHECKS, STATUSES, VIOLATED, scan_corpus, summarize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--csv", help="write per-order counts here")
    args = ap.parse_args()

    rows = []
    violations = []
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        findings = list(scan_corpus(f"connected{n}", sorted(CHECKS), range(0, n + 6), jobs=args.jobs))
        violations += [f for f in findings if f.status == VIOLATED]
        for check, counts in summarize(findings).items():
            rows.append([n, check] + [counts[s] for s in STATUSES])
        print(f"n={n}: {len(findings)} findings in {time.perf_counter() - t0:.1f}s", file=sys.stderr)

    header = ["n", "check", *STATUSES]
    print(" ".join(f"{h:>12}" for h in header))
    for r in rows:
        print(" ".join(f"{v:>12}" for v in r))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)
    for f in violations:
        print("VIOLATION", f.dumps())
    return 2 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
