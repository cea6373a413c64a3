"""Command-line front end.

Subcommands: eval (single valuation, optionally explained), scan
(divisibility/oddness range scans), verify (formula-vs-oracle grid with
branch coverage), table (per-n valuation tables).

Exit codes: 0 ok; 1 formula/oracle mismatch or integrity failure; 2 usage;
3 eval disagreement under --method both; 4 branch-coverage gap.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .arith import FormulaIntegrityError, require_prime
from .formulas import (
    INDEX_CAP,
    is_odd_2n,
    is_odd_4n,
    is_odd_8n,
    divides_p_central,
    nu2_central,
    nu_central,
    nu_fibonomial_formula,
)
from .oracle import MODULAR_CAP, OracleTier, exact_cap, nu_fibonomial_oracle
from .verify import VerifyConfig, run_verify

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3
EXIT_COVERAGE = 4


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibval",
        description="p-adic valuations of Fibonomial coefficients: closed forms, "
                    "brute-force cross-checks, scans and tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one valuation")
    ev.add_argument("--p", type=int, required=True, help="prime")
    ev.add_argument("--a", type=int, help="exponent in the central form (p^a*n, n)")
    ev.add_argument("--n", type=int, help="cofactor in the central form")
    ev.add_argument("--m", type=int, help="upper index in the general form (m, k)")
    ev.add_argument("--k", type=int, help="lower index in the general form")
    ev.add_argument("--method", choices=["formula", "oracle", "both"], default="formula")
    ev.add_argument("--explain", action="store_true", help="print the branch trace")
    ev.set_defaults(func=cmd_eval)

    sc = sub.add_parser("scan", help="list n <= n-max satisfying a predicate")
    sc.add_argument("--p", type=int, required=True)
    sc.add_argument("--a", type=int, required=True)
    sc.add_argument("--n-max", type=int, required=True, dest="n_max")
    sc.add_argument("--predicate", required=True,
                    choices=["divisible", "not_divisible", "odd_fibonomial"])
    sc.add_argument("--format", choices=["lines", "json"], default="lines")
    sc.set_defaults(func=cmd_scan)

    ve = sub.add_parser("verify", help="run the formula-vs-oracle grid")
    ve.add_argument("--p-set", required=True, dest="p_set",
                    help="comma-separated primes, e.g. 2,3,5,7")
    ve.add_argument("--a-max", type=int, required=True, dest="a_max")
    ve.add_argument("--n-max", type=int, required=True, dest="n_max")
    ve.add_argument("--index-cap", type=int, default=10**5, dest="index_cap",
                    help="skip cells with p^a*n beyond this (default 100000)")
    ve.add_argument("--tier", choices=["exact", "modular"], default="modular",
                    help="oracle tier for the central grid (sweeps always use modular)")
    ve.set_defaults(func=cmd_verify)

    ta = sub.add_parser("table", help="emit p,a,n,nu,branch rows")
    ta.add_argument("--p", type=int, required=True)
    ta.add_argument("--a", type=int, required=True)
    ta.add_argument("--n-max", type=int, required=True, dest="n_max")
    ta.add_argument("--format", choices=["csv", "json"], default="csv")
    ta.set_defaults(func=cmd_table)
    return parser


def _require_positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be >= 1, got {value}")


def _check_cap(index: int) -> None:
    if index > INDEX_CAP:
        raise UsageError(f"index {index} exceeds the 2^63 cap")


_TRACE_FIELDS = ("modulus", "r", "s", "A", "delta", "epsilon", "z", "nu_fz", "b",
                 "m_prime", "k_prime")


def cmd_eval(args: argparse.Namespace) -> int:
    require_prime(args.p)
    central = args.a is not None or args.n is not None
    general = args.m is not None or args.k is not None
    if central == general:
        raise UsageError("give either --a/--n (central form) or --m/--k (general form)")
    if central:
        if args.a is None or args.n is None:
            raise UsageError("central form needs both --a and --n")
        _require_positive(a=args.a, n=args.n)
        m_index, k_index = args.p**args.a * args.n, args.n
    else:
        if args.m is None or args.k is None:
            raise UsageError("general form needs both --m and --k")
        if not 0 <= args.k <= args.m:
            raise UsageError(f"need 0 <= k <= m, got m={args.m}, k={args.k}")
        m_index, k_index = args.m, args.k
    _check_cap(m_index)

    formula_value = None
    if args.method in ("formula", "both"):
        if central:
            val, trace = nu_central(args.p, args.a, args.n)
        else:
            val, trace = nu_fibonomial_formula(args.p, args.m, args.k)
        formula_value = val.value
        print(f"nu (formula) = {formula_value}")
        if args.explain:
            print(f"theorem = {trace.theorem.value}")
            print(f"branch = {trace.describe()}")
            for name in _TRACE_FIELDS:
                field = getattr(trace, name)
                if field is not None:
                    print(f"{name} = {field}")

    oracle_value = None
    if args.method in ("oracle", "both"):
        tier = OracleTier.EXACT if m_index <= exact_cap() else OracleTier.MODULAR
        if tier is OracleTier.MODULAR and m_index > MODULAR_CAP:
            raise UsageError(f"index {m_index} exceeds the modular-oracle cap {MODULAR_CAP}")
        oracle_value = nu_fibonomial_oracle(args.p, m_index, k_index, tier).value
        print(f"nu (oracle/{tier.value}) = {oracle_value}")

    if args.method == "both":
        if formula_value == oracle_value:
            print("agreement: ok")
        else:
            print("agreement: MISMATCH")
            return EXIT_DISAGREEMENT
    return EXIT_OK


def _odd_fibonomial(p: int, a: int, n: int) -> bool:
    if p == 2:
        if a == 1:
            return is_odd_2n(n)
        if a == 2:
            return is_odd_4n(n)
        if a == 3:
            return is_odd_8n(n)
        return nu2_central(a, n)[0].value == 0
    return nu_fibonomial_formula(2, p**a * n, n)[0].value == 0


def cmd_scan(args: argparse.Namespace) -> int:
    require_prime(args.p)
    _require_positive(a=args.a, n_max=args.n_max)
    _check_cap(args.p**args.a * args.n_max)
    hits = []
    for n in range(1, args.n_max + 1):
        if args.predicate == "odd_fibonomial":
            keep = _odd_fibonomial(args.p, args.a, n)
        else:
            divisible = divides_p_central(args.p, args.a, n)[0]
            keep = divisible if args.predicate == "divisible" else not divisible
        if keep:
            hits.append(n)
    if args.format == "json":
        print(json.dumps(hits))
    else:
        for n in hits:
            print(n)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        primes = tuple(int(tok) for tok in args.p_set.split(",") if tok.strip())
    except ValueError as exc:
        raise UsageError(f"bad --p-set: {exc}") from exc
    if not primes:
        raise UsageError("--p-set is empty")
    for p in primes:
        require_prime(p)
    _require_positive(a_max=args.a_max, n_max=args.n_max, index_cap=args.index_cap)
    _check_cap(args.index_cap)
    config = VerifyConfig(primes=primes, a_max=args.a_max, n_max=args.n_max,
                          index_cap=args.index_cap,
                          tier=OracleTier(args.tier))
    report = run_verify(config)
    print(report.to_json())
    print(f"checked {report.cells_checked} cells: {len(report.mismatches)} mismatches, "
          f"{len(report.uncovered)} uncovered branches "
          f"[{report.elapsed_seconds:.1f}s]", file=sys.stderr)
    return report.exit_code


def cmd_table(args: argparse.Namespace) -> int:
    require_prime(args.p)
    _require_positive(a=args.a, n_max=args.n_max)
    _check_cap(args.p**args.a * args.n_max)
    rows = []
    for n in range(1, args.n_max + 1):
        val, trace = nu_central(args.p, args.a, n)
        rows.append({"p": args.p, "a": args.a, "n": n, "nu": val.value,
                     "branch": trace.branch_label})
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["p", "a", "n", "nu", "branch"])
        for row in rows:
            writer.writerow([row["p"], row["a"], row["n"], row["nu"], row["branch"]])
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormulaIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
