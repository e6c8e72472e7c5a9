#!/usr/bin/env python3
"""rho of each named family minus rho'(m), for a range of even m. Writes CSV to stdout."""

import argparse
import csv
import sys

from h43bound.graphs import FAMILY_NAMES, EW1_MIN_M, build_family
from h43bound.spectral import perron_root, rho_prime

MIN_M = {"s-minus": 6, "t": 10, **EW1_MIN_M}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=60)
    args = ap.parse_args()
    w = csv.writer(sys.stdout)
    w.writerow(["m", "rho_prime", *FAMILY_NAMES])
    for m in range(10, args.m_max + 1, 2):
        rp = rho_prime(m).value
        row = [m, f"{rp:.12f}"]
        for name in FAMILY_NAMES:
            row.append(f"{perron_root(build_family(name, m)) - rp:+.12f}" if m >= MIN_M[name] else "")
        w.writerow(row)


if __name__ == "__main__":
    main()
