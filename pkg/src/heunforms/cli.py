"""Command-line front end.

Exit codes: 0 all checks pass, 1 at least one failure or finding, 2 usage
error.  Rationals are read and printed as ``p/q``.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from . import closed_forms as cf
from .entropy import DistributionFamily, power_sum_2, renyi2
from .exact import as_rational, format_rational
from .heun import InvalidParameters, SeriesDomainError, evaluate_series
from .identities import emit_report, normalize_identity_id, sweep
from .series import PoleError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected p/q, got {text!r}") from exc


def _fmt(value, digits: int) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return mpmath.nstr(value, digits)


def _family(name: str) -> str:
    try:
        return cf.normalize_family_id(name)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc


def _hl_aux(fam: str, args) -> Optional[int]:
    spec = cf.HL_FAMILIES[fam]
    if spec.aux_name is None:
        return None
    value = getattr(args, spec.aux_name)
    if value is None:
        raise UsageError(f"{fam} needs --{spec.aux_name}")
    return value


def _hc_form(fam: str, args) -> cf.HcClosedForm:
    return cf.hc_closed_form(
        fam, p=args.p, n=args.n, j=args.j or 0, lam=args.lam or 0,
        alpha=args.alpha, gamma=args.gamma,
    )


def cmd_eval(args) -> int:
    fam = _family(args.family)
    x = args.x
    if fam in cf.HL_FAMILIES:
        form = cf.hl_closed_form(fam, args.n, _hl_aux(fam, args))
        params = form.params
    else:
        hc = _hc_form(fam, args)
        params = hc.params

    if args.method == "closed":
        value = form(x) if fam in cf.HL_FAMILIES else hc(x, tol=10.0 ** -args.digits)
    elif args.method == "series":
        value, order = evaluate_series(params, x, digits=args.digits)
        print(f"# local series summed to order {order}", file=sys.stderr)
    else:
        value = _index_sum(fam, args, x)
    print(_fmt(value, args.digits))
    return EXIT_OK


def _index_sum(fam: str, args, x: Fraction):
    if fam == "F2.2":
        return cf.index_form_sum("1.3", args.n, x).value
    if fam == "F2.8":
        if x >= 0:
            raise UsageError("the F2.8 index sum is defined for x < 0 (it sums at -x)")
        s = cf.index_form_sum("1.4", args.n + 1, -x, 10.0 ** -args.digits)
        # truncated partial sum: print as a decimal, not as a misleading p/q
        with mpmath.workdps(args.digits + 10):
            return mpmath.mpf(s.value.numerator) / s.value.denominator
    if fam == "C3.7":
        return power_sum_2(DistributionFamily("poisson", args.n, x), 10.0 ** -args.digits).value
    raise UsageError(f"--method sum is defined only for F2.2, F2.8 and C3.7, not {fam}")


def cmd_certify(args) -> int:
    fam = _family(args.family)
    report = cf.certify_family(fam, args.max_n, max_aux=args.max_aux)
    for member in report.failures:
        lead = ""
        if member.leading_residual is not None:
            c, e = member.leading_residual
            lead = f" leading residual term {format_rational(c)} * ^{e}"
        note = f" ({member.note})" if member.note else ""
        params = ", ".join(f"{k}={v}" for k, v in member.params.items())
        print(f"FINDING {fam} {params}:{lead}{note}")
    status = "certified" if report.passed else "FAILED"
    print(f"{fam}: {len(report)} members, {len(report.failures)} failures, {status}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _run_sweep(ids, args) -> int:
    reports = sweep(ids, args.max_n, threads=args.threads)
    summary_stream = sys.stdout
    if args.format or args.out:
        payload = emit_report(reports, args.format or "json")
        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.flush()
            summary_stream = sys.stderr
    failures = 0
    for rep in reports:
        failures += len(rep.failures)
        state = "all pass" if rep.passed else f"{len(rep.failures)} FAILURES"
        print(f"{rep.id}: {rep.case_count} cases, {state}", file=summary_stream)
    total = sum(r.case_count for r in reports)
    print(f"total: {total} cases, {failures} failures", file=summary_stream)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.all:
        ids = None
    elif args.identity:
        try:
            ids = [normalize_identity_id(i) for i in args.identity]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
    else:
        raise UsageError("give --identity <id> or --all")
    return _run_sweep(ids, args)


def cmd_sweep(args) -> int:
    return _run_sweep(None, args)


def cmd_entropy(args) -> int:
    fam = DistributionFamily(args.dist, args.n, args.x)
    s = power_sum_2(fam, args.tol)
    print(f"power_sum: {_fmt(s.value, args.digits)}")
    if not s.exact:
        print(f"tail_bound: {mpmath.nstr(mpmath.mpf(s.tail_bound), 5)}")
    print(f"renyi2: {mpmath.nstr(renyi2(s.value, args.base), args.digits)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heunforms",
        description="Exact Heun closed forms, certification and identity sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one family member at a rational point")
    ev.add_argument("--family", required=True)
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--m", type=int)
    ev.add_argument("--k", type=int)
    ev.add_argument("--j", type=int)
    ev.add_argument("--p", type=_rational)
    ev.add_argument("--lambda", dest="lam", type=_rational)
    ev.add_argument("--alpha", type=_rational)
    ev.add_argument("--gamma", type=_rational)
    ev.add_argument("--x", type=_rational, required=True)
    ev.add_argument("--method", choices=("closed", "series", "sum"), default="closed")
    ev.add_argument("--digits", type=int, default=30)
    ev.set_defaults(func=cmd_eval)

    ce = sub.add_parser("certify", help="ODE-residual certification of a family")
    ce.add_argument("--family", required=True)
    ce.add_argument("--max-n", type=int, required=True)
    ce.add_argument("--max-aux", type=int, help="cap for an unbounded auxiliary index (F2.T4)")
    ce.set_defaults(func=cmd_certify)

    def sweep_flags(p):
        p.add_argument("--max-n", type=int, default=30)
        p.add_argument("--format", choices=("json", "csv"))
        p.add_argument("--out")
        p.add_argument("--threads", type=int, default=None,
                       help="worker processes (default: all cores)")

    ve = sub.add_parser("verify", help="verify identities over all admissible tuples")
    group = ve.add_mutually_exclusive_group()
    group.add_argument("--identity", action="append")
    group.add_argument("--all", action="store_true")
    sweep_flags(ve)
    ve.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", help="verify the whole identity catalog")
    sweep_flags(sw)
    sw.set_defaults(func=cmd_sweep)

    en = sub.add_parser("entropy", help="order-2 power sum and Renyi-2 entropy")
    en.add_argument("--dist", choices=("binomial", "negbinomial", "poisson"), required=True)
    en.add_argument("--n", type=int, required=True)
    en.add_argument("--x", type=_rational, required=True)
    en.add_argument("--tol", type=float, default=1e-15)
    en.add_argument("--base", type=float, default=None)
    en.add_argument("--digits", type=int, default=30)
    en.set_defaults(func=cmd_entropy)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, KeyError) as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SeriesDomainError, PoleError, InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cf.CertificationFailure as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
