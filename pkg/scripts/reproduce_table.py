#!/usr/bin/env python3
"""Run the residual search and compare against the tabulated maxima.

    python3 scripts/reproduce_table.py --m 18,20,22 --jobs 4 --out results/search.json
"""

import argparse
import json
import sys
import time
from pathlib import Path

from h43bound.search import PUBLISHED_BEST, run_search


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", default="18,20,22")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    ms = [int(t) for t in args.m.split(",")]

    t0 = time.perf_counter()
    report = run_search(ms, jobs=args.jobs)
    print(report.table())
    print()
    for r in report.rows:
        ref = PUBLISHED_BEST.get(r.m)
        if ref is None:
            print(f"m={r.m}: no tabulated value")
            continue
        print(f"m={r.m}: configs={r.n_configs} h43-free={r.n_h43_free} unique={r.n_unique} "
              f"|best - table| = {abs(r.best_rho - ref):.2e}")
    print(f"\n{time.perf_counter() - t0:.2f}s")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(report.to_json(), indent=2))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
