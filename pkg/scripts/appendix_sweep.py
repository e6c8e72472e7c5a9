#!/usr/bin/env python3
"""Sweep every positivity claim over even m and print the minimum of each quantity.

Also prints the exact m = 18 values next to the printed ones.
"""

import argparse
import time

from h43bound.verify import errata_at_18, positivity_claims, sweep_claim


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-min", type=int, default=18)
    ap.add_argument("--m-max", type=int, default=500)
    args = ap.parse_args()

    t0 = time.perf_counter()
    ms = range(args.m_min + args.m_min % 2, args.m_max + 1, 2)
    width = max(len(k) for k in positivity_claims())
    for name, (e, strict) in positivity_claims().items():
        r = sweep_claim(name, e, strict, ms)
        where = r.detail.get("argmin_m", r.detail.get("m"))
        val = r.detail.get("min_approx", r.detail.get("approx"))
        print(f"{name:<{width}}  {r.status:5s}  min {val:>16.6f} at m={where}")
    print()
    for e in errata_at_18():
        print(f"{e['quantity']}: printed {e['printed']}, exact {e['computed']}")
    print(f"\n{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
