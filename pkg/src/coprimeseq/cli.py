"""Command line interface.

Exit status is 0 on success, 1 when a verification (or floating-point
tolerance) check fails and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import fourier, genfunc, sequence
from .numtheory import factor

METHODS = ("closed", "recurrence", "fourier", "exact-fourier", "gf")
FLOAT_RECONSTRUCTION_CAP = 4096


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out)
        out.write("\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        for r in rows:
            out.write(" ".join(str(v) for v in r.values()) + "\n")


def _values(args, ns: list[int]) -> list[int]:
    """``P(n)`` for each ``n`` by the method chosen on the command line."""
    method = args.method
    if method in ("closed", "recurrence"):
        params = sequence.sequence_params(args.mod, args.period)
        f = sequence.eval_closed if method == "closed" else sequence.eval_recurrence
        return [f(params, n) for n in ns]
    if method in ("fourier", "exact-fourier"):
        exp = fourier.solve_coefficients(args.mod, args.period)
        if method == "exact-fourier":
            return [fourier.eval_exact(exp, n) for n in ns]
        vals = fourier.eval_fourier_many(exp, ns)
        for v in vals:
            if not v.residual < args.tol:
                raise fourier.PrecisionError(v, args.tol)
        return [v.rounded for v in vals]
    # gf
    if min(ns) < 1:
        raise UsageError("method gf only covers n >= 1")
    series = genfunc.expand_gf(args.mod, max(ns))
    return [series.coefficient(n) for n in ns]


def cmd_eval(args, out) -> int:
    (value,) = _values(args, [args.n])
    if args.format == "plain":
        out.write(f"{value}\n")
    else:
        _emit_rows([{"a": args.a, "n": args.n, "method": args.method, "value": value}], args.format, out)
    return 0


def cmd_range(args, out) -> int:
    if args.lo > args.hi:
        raise UsageError("--from must not exceed --to")
    ns = list(range(args.lo, args.hi + 1))
    vals = _values(args, ns)
    _emit_rows([{"n": n, "P": v} for n, v in zip(ns, vals)], args.format, out)
    if args.figure:
        from .figures import plot_sequence

        plot_sequence(args.a, ns, vals, fourier.density_limit(args.mod), args.figure)
    return 0


def cmd_coeffs(args, out) -> int:
    exp = fourier.solve_coefficients(args.mod, args.period)
    if args.format == "json":
        out.write(fourier.export_json(exp) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["nu", "re", "im", "m", "residue"])
        for nu, (c, m, r) in enumerate(
            zip(exp.coeffs, range(-exp.period + 1, 1), exp.residue_table.entries)
        ):
            w.writerow([nu, f"{c.real:.17g}", f"{c.imag:.17g}", m, _frac(r)])
    else:
        out.write(f"a={exp.mod.a} R={exp.mod.R} Q={exp.mod.Q} phi={exp.mod.phi} period={exp.period}\n")
        out.write(f"c0={_frac(exp.c0)}\n")
        for nu, c in enumerate(exp.coeffs):
            out.write(f"c[{nu}]={c.real:.17g} {c.imag:+.17g}i\n")
        for m, r in zip(range(-exp.period + 1, 1), exp.residue_table.entries):
            out.write(f"r[{m}]={_frac(r)}\n")
    if args.figure:
        from .figures import plot_coefficients

        plot_coefficients(args.a, exp.coeffs, exp.residue_table.entries, args.figure)
    return 0


def cmd_series(args, out) -> int:
    series = genfunc.expand_gf(args.mod, args.terms)
    if args.format == "csv":
        out.write(genfunc.series_csv(series))
    else:
        _emit_rows([{"n": n, "coefficient": c} for n, c in enumerate(series.terms, 1)], args.format, out)
    return 0


def _reconstruction_lines(mod, period_choice: str, tol: float) -> list[tuple[bool, str]]:
    params = sequence.sequence_params(mod, period_choice)
    lines = []
    if params.period > fourier.PERIOD_CAP:
        table = fourier.residue_table(params)
        ok = all(fourier.eval_exact(table, n) == v for n, v in params.initial_conditions().items())
        lines.append((ok, f"exact reconstruction of {params.period + 1} initial conditions (no coefficients: period above cap)"))
        return lines
    exp = fourier.solve_coefficients(params)
    init = params.initial_conditions()
    ok = all(fourier.eval_exact(exp, n) == v for n, v in init.items())
    lines.append((ok, f"exact reconstruction of {len(init)} initial conditions"))
    if exp.period <= FLOAT_RECONSTRUCTION_CAP:
        vals = fourier.eval_fourier_many(exp, init)
        worst = max(v.residual for v in vals)
        ok = all(v.rounded == init[v.n] for v in vals) and worst < tol
        lines.append((ok, f"floating reconstruction, max residual {worst:.3g} (tol {tol:g})"))
    return lines


def cmd_verify(args, out) -> int:
    if args.lo >= args.hi:
        raise UsageError("verify needs --from < --to")
    report = sequence.verify_window(args.mod, args.lo, args.hi, period_choice=args.period)
    results = [(c.passed, line) for c, line in zip(report.checks, report.lines())]
    results += [(ok, ("PASS " if ok else "FAIL ") + text) for ok, text in _reconstruction_lines(args.mod, args.period, args.tol)]
    if args.mod.phi <= genfunc.PHI_CEILING:
        rep = genfunc.gf_vs_sequence(args.mod, args.terms)
        results.append((rep.passed, rep.line()))
        ok, deg = genfunc.clear_denominator(genfunc.expand_gf(args.mod, args.terms))
        results.append((ok, ("PASS" if ok else f"FAIL at degree {deg}") + f" gf denominator identity through t^{args.terms}"))
    passed = all(ok for ok, _ in results)
    if args.format == "json":
        json.dump({"a": args.a, "from": args.lo, "to": args.hi, "passed": passed,
                   "checks": [{"passed": ok, "line": line} for ok, line in results]}, out)
        out.write("\n")
    else:
        for _, line in results:
            out.write(line + "\n")
    if args.figure:
        from .figures import plot_sequence

        ns = list(range(args.lo, args.hi + 1))
        params = sequence.sequence_params(args.mod, args.period)
        plot_sequence(args.a, ns, sequence.values(params, ns), fourier.density_limit(args.mod), args.figure)
    return 0 if passed else 1


def cmd_shift(args, out) -> int:
    if args.b is None:
        raise UsageError("shift needs --b")
    try:
        s = sequence.shift_between(args.mod, factor(args.b))
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.format == "plain":
        out.write(f"{s}\n")
    else:
        _emit_rows([{"a": args.a, "b": args.b, "shift": s}], args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprimeseq",
        description="The increasing sequence of integers coprime to a modulus: "
        "evaluation, Fourier coefficients, generating-function series and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=int, required=True, help="modulus a >= 2")
    common.add_argument("--period", choices=sequence.PERIOD_CHOICES, default="Q",
                        help="recurrence period: minimal Q (default) or phi")
    common.add_argument("--tol", type=float, default=fourier.DEFAULT_TOL,
                        help="floating tolerance for Fourier evaluation (default 1e-6)")
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    p = sub.add_parser("eval", parents=[common], help="print P(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("range", parents=[common], help="print n, P(n) over [from, to]")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="closed")
    p.add_argument("--figure", metavar="PATH", help="also write a plot of the window")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("coeffs", parents=[common], help="Fourier coefficients and residue table")
    p.add_argument("--figure", metavar="PATH", help="also write a plot of the coefficients")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("series", parents=[common], help="generating-function coefficients")
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=[common], help="run the invariant checks over a window")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--terms", type=int, default=1000, help="series terms compared (default 1000)")
    p.add_argument("--figure", metavar="PATH", help="also write a plot of the window")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("shift", parents=[common], help="index shift between moduli with equal radical")
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_shift)
    return parser


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        args.mod = factor(args.a)
        buf = io.StringIO()
        status = args.func(args, buf)
    except (UsageError, ValueError, OverflowError) as e:
        parser.error(str(e))
    except fourier.PrecisionError as e:
        print(f"coprimeseq: {e}; try --method exact-fourier", file=sys.stderr)
        return 1
    out.write(buf.getvalue())
    return status


if __name__ == "__main__":
    sys.exit(main())
