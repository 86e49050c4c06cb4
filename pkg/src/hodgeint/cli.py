"""``hodge`` command line: single integrals, generating series, verification suites."""
from __future__ import annotations

import argparse
import json
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import closed_forms as cf
from .arith import CapacityError, bernoulli
from .engine import default_hodge_engine
from .intersect import UnstableError, kappa_psi_integral, psi_integral
from .localize import C_localized
from .series import SeriesError, series_pow_kplus1, sinc_half_inverse
from .suites import SUITES, reports_to_csv, reports_to_json, reports_to_text, run_suite

__all__ = ["main", "run", "build_parser"]

# deep memoized recursion inside worker threads
_THREAD_STACK = 256 * 1024 * 1024


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--cache-file", type=Path, default=None)
    common.add_argument("--no-timing", action="store_true")

    p = argparse.ArgumentParser(prog="hodge", description="Exact Hodge integrals over moduli of curves.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("bern", parents=[common], help="Bernoulli numbers B_m")
    s.add_argument("m", type=int, nargs="+")

    s = sub.add_parser("psi", parents=[common], help="<tau_k1 ... tau_kn>_g")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--exps", type=int, nargs="*", default=[])

    s = sub.add_parser("kappa", parents=[common], help="kappa/psi integral")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--exps", type=int, nargs="*", default=[])
    s.add_argument("--kappas", type=int, nargs="+", required=True)
    s.add_argument("--convention", choices=["mumford", "ac"], default="mumford")

    s = sub.add_parser("hodge", parents=[common], help="psi/lambda Hodge integral")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--psi", type=int, nargs="*", default=[])
    s.add_argument("--lambdas", type=int, nargs="*", default=[], help="lambda indices, e.g. 1 1 1 for lambda_1^3")

    s = sub.add_parser("series", parents=[common], help="generating series")
    s.add_argument("which", choices=["f0", "F", "c", "fxi", "F-closed"])
    s.add_argument("--max-genus", type=int, default=3)
    s.add_argument("--xi", type=int, default=0)
    s.add_argument("--order", type=int, default=None, help="truncation order in t (overrides --max-genus)")

    s = sub.add_parser("cover", parents=[common], help="multiple cover contribution C(g,d)")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--degree", type=int, required=True)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite_pos", nargs="?", choices=[*SUITES, "all"], metavar="SUITE")
    s.add_argument("--suite", choices=[*SUITES, "all"], default=None)
    s.add_argument("--max-genus", type=int, default=3)
    s.add_argument("--max-degree", type=int, default=4)
    return p


def _emit(args, value, label: str = "value") -> None:
    if args.format == "json":
        print(json.dumps({label: str(value)}))
    elif args.format == "csv":
        print(f"{label}\n{value}")
    else:
        print(value)


def _series_cmd(args) -> None:
    G = args.max_genus if args.order is None else args.order // 2
    if G < 1:
        raise ValueError("series need order >= 2 (max genus >= 1)")
    E = default_hodge_engine()
    if args.which == "f0":
        out = E.capped_lambda_series(0, G)
    elif args.which == "fxi":
        out = E.capped_lambda_series(args.xi, G)
    elif args.which == "c":
        out = cf.c_closed_series(2 * G)
    elif args.which == "F":
        out = E.F_table(G)
    else:
        out = series_pow_kplus1(sinc_half_inverse(2 * G))
    if args.format == "json":
        print(out.to_json())
    elif args.format == "csv":
        print("power,coeff")
        for n, c in enumerate(out.coeffs):
            print(f"{n},{c if not hasattr(c, 'to_json') else ' '.join(c.to_json())}")
    else:
        for n, c in enumerate(out.coeffs):
            if hasattr(c, "to_json"):
                print(f"t^{n}: [{', '.join(c.to_json())}]")
            else:
                print(f"t^{n}: {c}")


def _verify(args) -> int:
    name = args.suite or args.suite_pos or "all"
    names = list(SUITES) if name == "all" else [name]
    engine = default_hodge_engine()
    job = lambda n: run_suite(n, args.max_genus, args.max_degree, engine)
    if args.threads > 1:
        threading.stack_size(_THREAD_STACK)
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(job, names))
    else:
        reports = [job(n) for n in names]
    timing = not args.no_timing
    if args.format == "json":
        print(reports_to_json(reports, timing))
    elif args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        sys.stdout.write(reports_to_text(reports, timing))
    return 0 if all(r.passed for r in reports) else 1


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    engine = default_hodge_engine()
    if args.cache_file and args.cache_file.exists():
        engine.cache.load(args.cache_file)
    try:
        if args.cmd == "bern":
            for m in args.m:
                _emit(args, bernoulli(m), f"B_{m}")
            code = 0
        elif args.cmd == "psi":
            _emit(args, psi_integral(args.genus, args.exps))
            code = 0
        elif args.cmd == "kappa":
            _emit(args, kappa_psi_integral(args.genus, args.exps, args.kappas, args.convention))
            code = 0
        elif args.cmd == "hodge":
            _emit(args, engine.integral(args.genus, args.psi, args.lambdas))
            code = 0
        elif args.cmd == "series":
            _series_cmd(args)
            code = 0
        elif args.cmd == "cover":
            loc = C_localized(args.genus, args.degree)
            _emit(args, loc)
            code = 0 if loc == cf.C_closed(args.genus, args.degree) else 1
        else:
            code = _verify(args)
    except (UnstableError, CapacityError, SeriesError, ValueError) as e:
        print(f"hodge: error: {e}", file=sys.stderr)
        return 2
    if args.cache_file:
        engine.cache.dump(args.cache_file)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
