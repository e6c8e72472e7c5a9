"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .graphs import FAMILY_NAMES, build_family, family_quotient
from .search import run_search
from .spectral import PerronFailure, compare_rho, perron_root, rho_prime
from .verify import DEFAULT_M_MAX, SUITES, run_suite

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _even_list(text: str) -> list[int]:
    try:
        ms = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not ms:
        raise argparse.ArgumentTypeError("empty m list")
    return ms


def _check_even(ms, lo: int):
    for m in ms:
        if m % 2:
            raise UsageError(f"m must be even, got {m}")
        if m < lo:
            raise UsageError(f"m must be at least {lo}, got {m}")


def _report(command: str, args: argparse.Namespace, results: list[dict], t0: float) -> dict:
    flags = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    return {
        "tool-version": __version__,
        "schema-version": SCHEMA_VERSION,
        "command": command,
        "flags": flags,
        "results": results,
        "timing": {"seconds": round(time.perf_counter() - t0, 3)},
    }


def _flat(row: dict) -> dict:
    return {k: json.dumps(v) if isinstance(v, (dict, list, tuple)) else v for k, v in row.items()}


def _emit(report: dict, args):
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(report, indent=2, default=str) + "\n", encoding="utf-8")
    if getattr(args, "csv", None):
        rows = [_flat(r) for r in report["results"]]
        keys = list(dict.fromkeys(k for r in rows for k in r))
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, fieldnames=keys)
            w.writeheader()
            w.writerows(rows)


def cmd_rho_prime(args) -> int:
    t0 = time.perf_counter()
    _check_even(args.m, 6)
    results = []
    for m in args.m:
        r = rho_prime(m)
        print(f"m={m}  rho'(m) = {r.value:.12f}  in ({r.lo}, {r.hi}]")
        results.append({"m": m, "rho_prime": r.value, "lo": str(r.lo), "hi": str(r.hi)})
    _emit(_report("rho-prime", args, results, t0), args)
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    if args.m_max < 24 or args.m_max % 2:
        raise UsageError("--m-max must be an even integer >= 24")
    checks = run_suite(args.suite, args.m_max)
    for c in checks:
        if args.verbose or not c.ok:
            print(f"{c.status.upper():12s} {c.check_id}  {json.dumps(c.detail, default=str)}")
    n_ok = sum(c.ok for c in checks)
    print(f"{args.suite}: {n_ok}/{len(checks)} checks pass")
    _emit(_report("verify", args, [c.to_json() for c in checks], t0), args)
    return EXIT_OK if n_ok == len(checks) else EXIT_FAIL


def cmd_search(args) -> int:
    t0 = time.perf_counter()
    _check_even(args.m, 14)
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    report = run_search(args.m, margin=args.margin, jobs=args.jobs)
    print(report.table())
    for r in report.rows:
        if r.exceeds_published:
            print(f"NOTE m={r.m}: residual maximum {r.best_rho:.12f} exceeds the tabulated "
                  f"{r.published_best:.12f}")
        if r.reaches_rho_prime:
            note = " (expected below m = 18, where T_m also exceeds it)" if r.m < 18 else ""
            print(f"ALERT m={r.m}: a residual graph reaches rho'(m){note}")
    if args.dump_graphs is not None:
        d = Path(args.dump_graphs)
        d.mkdir(parents=True, exist_ok=True)
        for r in report.rows:
            (d / f"survivors-m{r.m}.g6").write_text("".join(s + "\n" for s in r.survivors))
    _emit(_report("search", args, [r.to_json() for r in report.rows], t0), args)
    if any(r.failures for r in report.rows):
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_family(args) -> int:
    t0 = time.perf_counter()
    _check_even([args.m], 6)
    try:
        g = build_family(args.name, args.m)
    except ValueError as exc:
        raise UsageError(str(exc))
    q = family_quotient(args.name, args.m)
    rho = perron_root(g)
    verdict = compare_rho(g, args.m, margin=args.margin)
    print(f"{args.name} at m={args.m}: n={g.n} edges={g.num_edges}")
    print("quotient matrix:")
    for row in q.as_lists():
        print("  " + " ".join(f"{e:3d}" for e in row))
    print(f"char poly: {q.char_poly()}")
    print(f"rho = {rho:.12f}  rho'(m) = {rho_prime(args.m).value:.12f}  verdict: {verdict}")
    result = {
        "name": args.name, "m": args.m, "n": g.n, "edges": g.num_edges,
        "quotient": q.as_lists(), "char_poly": str(q.char_poly()),
        "rho": rho, "rho_prime": rho_prime(args.m).value, "verdict": verdict,
        "graph6": g.to_graph6(),
    }
    _emit(_report("family", args, [result], t0), args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="h43bound", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp):
        sp.add_argument("--out", help="write the JSON report here")
        sp.add_argument("--csv", help="write the result rows as CSV here")

    sp = sub.add_parser("rho-prime", help="largest root of p_m with its isolating interval")
    sp.add_argument("--m", type=_even_list, required=True)
    outputs(sp)
    sp.set_defaults(func=cmd_rho_prime)

    sp = sub.add_parser("verify", help="run an exact verification suite")
    sp.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    sp.add_argument("--m-max", type=int, default=DEFAULT_M_MAX)
    sp.add_argument("-v", "--verbose", action="store_true", help="print passing checks too")
    outputs(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="exhaustive residual configuration search")
    sp.add_argument("--m", type=_even_list, default=[18, 20, 22])
    sp.add_argument("--margin", type=float, default=1e-6)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--dump-graphs", nargs="?", const=".", default=None, metavar="DIR",
                    help="write survivors-m<M>.g6 files into DIR (default: current directory)")
    outputs(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("family", help="one named family against rho'(m)")
    sp.add_argument("--name", choices=FAMILY_NAMES, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--margin", type=float, default=1e-6)
    outputs(sp)
    sp.set_defaults(func=cmd_family)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PerronFailure, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
