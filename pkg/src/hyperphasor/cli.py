"""Command line front end.

Exit codes: 0 success or passing check, 1 parse or domain error, 2 failing
check, 3 overflow.

An argument that starts with ``-`` and contains ``(``, such as
``-cos(t)+sin(t)``, is taken as the expression rather than an option.
Other expressions starting with ``-`` can be passed after ``--``.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .errors import HyperphasorError, Overflow
from .expr import check, classify_groups, eval_expr, format_number, parse_expr, render, sample, simplify, to_csv

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CHECK_FAILED = 2
EXIT_OVERFLOW = 3


def _finite(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=10, help="digits after the decimal point (default 10)")
    common.add_argument("--sine-form", action="store_true", help="emit circular groups as sines")
    common.add_argument(
        "--eps", type=_finite, default=0.0,
        help="relative tolerance for snapping nearly lightlike groups to exp terms (lossy, default 0)",
    )

    parser = argparse.ArgumentParser(
        prog="hyperphasor",
        description="Canonicalize sums of circular and hyperbolic sines and cosines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simplify", parents=[common], help="print one canonical term per group")
    p.add_argument("expr")

    p = sub.add_parser("eval", parents=[common], help="evaluate the expression at one point")
    p.add_argument("expr")
    p.add_argument("--t", type=_finite, required=True)

    p = sub.add_parser("classify", parents=[common], help="Minkowski class of each hyperbolic group")
    p.add_argument("expr")

    p = sub.add_parser("check", parents=[common], help="compare the expression with its simplified form")
    p.add_argument("expr")
    p.add_argument("--from", dest="t0", type=_finite, default=-5.0)
    p.add_argument("--to", dest="t1", type=_finite, default=5.0)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--tol", type=_finite, default=1e-9)

    p = sub.add_parser("sample", parents=[common], help="emit t,value CSV rows")
    p.add_argument("expr")
    p.add_argument("--from", dest="t0", type=_finite, default=0.0)
    p.add_argument("--to", dest="t1", type=_finite, default=1.0)
    p.add_argument("--points", type=int, default=101)
    return parser


def run(args: argparse.Namespace, out=None) -> int:
    out = sys.stdout if out is None else out
    e = parse_expr(args.expr)
    if args.command == "simplify":
        print(render(simplify(e, args.sine_form, args.eps), args.precision), file=out)
    elif args.command == "eval":
        print(format_number(eval_expr(e, args.t), args.precision), file=out)
    elif args.command == "classify":
        groups = classify_groups(e, args.eps)
        if not groups:
            print("no hyperbolic terms", file=out)
        for omega, cls in groups:
            print(f"omega={format_number(omega, args.precision)}: {cls}", file=out)
    elif args.command == "check":
        report = check(e, args.t0, args.t1, args.points, args.tol, sine_form=args.sine_form, eps=args.eps)
        status = "PASS" if report.passed else "FAIL"
        print(
            f"{status} points={report.points} max_abs={report.max_abs:.3e} "
            f"max_rel={report.max_rel:.3e} tol={report.tol:.1e} overflow={report.overflow_points}",
            file=out,
        )
        if report.overflow_points:
            print(f"warning: {report.overflow_points} point(s) overflowed and were skipped", file=sys.stderr)
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    elif args.command == "sample":
        out.write(to_csv(sample(e, args.t0, args.t1, args.points)))
    return EXIT_OK


def _expressions_last(argv: list[str]) -> list[str]:
    # Option names never contain "(", so such arguments are expressions;
    # moving them behind "--" stops argparse from reading them as options.
    if "--" in argv:
        return argv
    exprs = [a for a in argv if a.startswith("-") and not a.startswith("--") and "(" in a]
    if not exprs:
        return argv
    return [a for a in argv if a not in exprs] + ["--"] + exprs


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_expressions_last(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return run(args)
    except Overflow as exc:
        print(f"overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except HyperphasorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
