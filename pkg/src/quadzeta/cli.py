"""Command-line front end: `quadzeta <command> ...` or `python -m quadzeta ...`."""
from __future__ import annotations

import argparse
import json
import sys
import time

from .base import CaseKind, QuadraticSetup, SetupError, is_odd_prime
from .engine import (
    check_functional_equation,
    closed_form,
    dirichlet_coeffs,
    solve_recurrence,
    unit_index,
)
from .oracle import BudgetExceeded, ideal_census, low_high_census, threshold, unit_quotient_counts
from .polyseries import render_xpoly, specialize_q
from .report import RunReport
from .verify import verify_grid

EXIT_FAIL = 1
EXIT_BUDGET = 3


def _odd_prime(s: str) -> int:
    try:
        p = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    if not is_odd_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not an odd prime")
    return p


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def _q_value(s: str) -> int:
    v = _nonneg(s)
    if v < 2:
        raise argparse.ArgumentTypeError("q must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadzeta",
        description="Zeta functions of the quadratic orders O_n = O_K[p^n Delta].")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *, n=False, n_max=False, k=False, k_max=False, p=False,
            q=False, terms=False, setup=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--case", required=True, choices=[c.value for c in CaseKind])
        if n:
            sp.add_argument("--n", type=_nonneg, required=True)
        if n_max:
            sp.add_argument("--n-max", type=_nonneg, required=name == "verify")
        if k:
            sp.add_argument("--k", type=_nonneg, required=True)
        if k_max:
            sp.add_argument("--k-max", type=_nonneg, required=True)
        if p:
            sp.add_argument("--p", type=_odd_prime, required=True)
        if q:
            sp.add_argument("--q", type=_q_value, default=None,
                            help="specialize q to this integer (default: symbolic)")
        if terms:
            sp.add_argument("--terms", type=_nonneg, required=True)
        if setup:
            sp.add_argument("--tau", type=int, default=None)
            sp.add_argument("--delta", type=int, default=None)
            sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--format", choices=["text", "latex", "json"], default="text")
        return sp

    add("closed-form", "closed-form numerator P_n(X)", n=True)
    add("recurrence", "numerator P_n(X) obtained from the recurrence", n=True)
    fe = add("check-fe", "check the functional equation of P_n", n=True)
    fe.add_argument("--n-max", type=_nonneg, default=None,
                    help="check every n from --n up to this value")
    add("series", "ideal counts a_0..a_K", n=True, q=True, terms=True)
    add("verify", "compare the enumeration oracle with the formulas", n_max=True,
        k_max=True, p=True, setup=True)
    add("census", "classify all ideals of O_n of index p^k", n=True, k=True, p=True,
        setup=True)
    add("units", "count units in the finite quotients", n=True, p=True, setup=True)
    return parser


def _setup(args, parser) -> QuadraticSetup:
    kind = CaseKind.parse(args.case)
    if args.tau is None and args.delta is None:
        return QuadraticSetup.preset(kind, args.p)
    if args.tau is None or args.delta is None:
        parser.error("--tau and --delta must be given together")
    try:
        return QuadraticSetup(args.p, args.tau, args.delta, kind)
    except SetupError as exc:
        parser.error(str(exc))


def _params(args, setup: QuadraticSetup | None = None, **extra) -> dict:
    out = {"case": args.case}
    for name in ("n", "p", "k", "q", "terms"):
        if getattr(args, name, None) is not None:
            out[name] = getattr(args, name)
    if setup is not None:
        out["tau"], out["delta"] = setup.tau, setup.delta
    out.update(extra)
    return out


def cmd_polynomial(args, out) -> int:
    z = closed_form(args.case, args.n) if args.command == "closed-form" \
        else solve_recurrence(args.case, args.n)
    if args.format == "json":
        print(json.dumps(z.P.nested()), file=out)
    else:
        print(render_xpoly(z.P, args.format), file=out)
    return 0


def cmd_check_fe(args, out, report: RunReport) -> int:
    hi = args.n if args.n_max is None else args.n_max
    verdicts = [{"n": n, "holds": check_functional_equation(closed_form(args.case, n))}
                for n in range(args.n, hi + 1)]
    report.parameters["n_range"] = [args.n, hi]
    report.results["verdicts"] = verdicts
    report.checks = [{"name": f"functional_equation n={v['n']}", "passed": v["holds"],
                      "expected": True, "actual": v["holds"]} for v in verdicts]
    report.passed = all(v["holds"] for v in verdicts)
    if args.format != "json":
        for v in verdicts:
            print(f"n={v['n']}: {'holds' if v['holds'] else 'FAILS'}", file=out)
    return 0 if report.passed else EXIT_FAIL


def cmd_series(args, out, report: RunReport) -> int:
    s = dirichlet_coeffs(args.case, args.n, args.terms)
    if args.q is not None:
        values = specialize_q(s, args.q)
        report.results["series"] = values
        text = "[" + ", ".join(str(v) for v in values) + "]"
    else:
        report.results["series"] = s.nested()
        text = str(s)
    if args.format != "json":
        print(text, file=out)
    return 0


def cmd_verify(args, out, report: RunReport, parser) -> int:
    setup = _setup(args, parser)
    report.parameters = _params(args, setup, n_range=[0, args.n_max], k_range=[0, args.k_max])
    grid = verify_grid(setup, args.n_max, args.k_max, workers=args.workers)
    report.checks = [c.to_dict() for c in grid.checks]
    report.passed = grid.passed
    if args.format != "json":
        for c in grid.failures():
            print(c.line(), file=out)
        n_ok = sum(c.passed for c in grid.checks)
        print(f"{n_ok}/{len(grid.checks)} checks passed", file=out)
        print("ALL PASS" if grid.passed else "MISMATCH", file=out)
    return 0 if grid.passed else EXIT_FAIL


def _type_label(w: tuple) -> str:
    return str(w[0]) if len(w) == 1 else f"({w[0]},{w[1]})"


def cmd_census(args, out, report: RunReport, parser) -> int:
    setup = _setup(args, parser)
    report.parameters = _params(args, setup)
    census = ideal_census(setup, args.n, args.k, workers=args.workers)
    lh = low_high_census(setup, args.n, args.k, census)
    t = threshold(setup.kind, args.n)
    types = [{"type": list(w), "count": c, "low": min(w) < t}
             for w, c in sorted(census.types.items())]
    mults = [{"i": i, "count": c} for i, c in sorted(census.multipliers.items())]
    report.results.update(total=census.total, principal=census.principal,
                          nonprincipal=census.nonprincipal, low=census.low,
                          high=census.high, types=types, multipliers=mults)
    report.checks = [{"name": "low/high type structure", "passed": lh.ok,
                      "expected": [], "actual": lh.violations}]
    report.passed = lh.ok
    if args.format != "json":
        print(f"total {census.total}, principal {census.principal}, "
              f"nonprincipal {census.nonprincipal}", file=out)
        print(f"low {census.low}, high {census.high} (threshold t_n = {t})", file=out)
        for row in types:
            kind = "low" if row["low"] else "high"
            print(f"  type {_type_label(tuple(row['type']))}: {row['count']} ({kind})", file=out)
        for row in mults:
            print(f"  multiplier O_{row['i']}: {row['count']}", file=out)
        for v in lh.violations:
            print(f"VIOLATION {v}", file=out)
    return 0 if lh.ok else EXIT_FAIL


def cmd_units(args, out, report: RunReport, parser) -> int:
    setup = _setup(args, parser)
    report.parameters = _params(args, setup)
    if args.n < 1:
        parser.error("units needs --n >= 1")
    big, small = unit_quotient_counts(setup, args.n)
    idx = unit_index(setup.kind, args.n)
    expected = idx(setup.p)
    ok = big == expected * small
    report.results.update(units_O0_mod_pn=big, units_On_mod_pn=small,
                          unit_index=list(idx.coeffs))
    report.checks = [{"name": "unit index", "passed": ok, "expected": expected,
                      "actual": [big, small]}]
    report.passed = ok
    if args.format != "json":
        print(f"|(O_0/p^n O_0)^*| = {big}, |(O_n/p^n O_0)^*| = {small}", file=out)
        print(f"ratio {big / small:g}, formula {idx} = {expected}", file=out)
    return 0 if ok else EXIT_FAIL


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("closed-form", "recurrence"):
        return cmd_polynomial(args, out)

    start = time.perf_counter()
    report = RunReport(command=args.command, argv=argv, parameters=_params(args))
    try:
        if args.command == "check-fe":
            code = cmd_check_fe(args, out, report)
        elif args.command == "series":
            code = cmd_series(args, out, report)
        elif args.command == "verify":
            code = cmd_verify(args, out, report, parser)
        elif args.command == "census":
            code = cmd_census(args, out, report, parser)
        else:
            code = cmd_units(args, out, report, parser)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    report.wall_time = round(time.perf_counter() - start, 6)
    if args.format == "json":
        print(report.to_json(), file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
