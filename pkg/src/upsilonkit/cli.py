"""Command-line surface.

Expressions use the grammar of upsilonkit.expr, e.g. "T(3,4)",
"T(5,6) # T(2,5) # -T(5,7)", "2*T(2,3) # U".  Rational arguments are
written a/b or a.  Exit codes: 0 success, 1 verification mismatch,
2 parse or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .expr import Torus, Unknot, expr_to_str, parse_expr, realize
from .plfun import ext_to_json, format_ext, pl_to_json, rational_to_json
from .staircase import LaurentPoly, alexander_torus
from .upsilon import jump_values, upsilon2, upsilon_pl
from .cfk import complex_to_json
from . import verify


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upsilonkit",
        description="Exact upsilon and secondary upsilon invariants of "
                    "torus knots, mirrors and connected sums.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_expr_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", help="knot expression, e.g. 'T(3,4) # -T(2,5)'")
        p.add_argument("--max-generators", type=int, default=20000,
                       help="size guard for tensor products; 0 disables "
                            "(default 20000)")
        return p

    p = sub.add_parser("alexander",
                       help="Alexander polynomial of a torus knot")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = add_expr_command("upsilon", "upsilon as a piecewise-linear function")
    p.add_argument("--json", action="store_true")

    p = add_expr_command("upsilon2", "secondary upsilon at parameters t, s")
    p.add_argument("--t", type=_rational, required=True,
                   help="parameter t in (0,2)")
    p.add_argument("--s", type=_rational, default=None,
                   help="parameter s in [0,2]; defaults to t")
    p.add_argument("--json", action="store_true")

    p = add_expr_command("jumps", "jump-value report over the candidate "
                                  "parameters")
    p.add_argument("--max-t", type=_rational, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-paper",
                       help="recompute the published claims; nonzero exit on "
                            "any mismatch")
    p.add_argument("--fast", action="store_true",
                   help="trimmed parameter ranges")

    add_expr_command("dump-complex", "JSON dump of the realized complex")
    return parser


def _realize(args):
    limit = None if args.max_generators <= 0 else args.max_generators
    return realize(parse_expr(args.expr), max_generators=limit)


def _cmd_alexander(args) -> int:
    e = parse_expr(args.expr)
    if isinstance(e, Torus):
        poly = alexander_torus(e.p, e.q)
    elif isinstance(e, Unknot):
        poly = LaurentPoly.one()
    else:
        print("alexander: only certified for torus knots, got "
              f"{expr_to_str(e)}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(poly.to_json()))
    else:
        print(poly)
    return 0


def _cmd_upsilon(args) -> int:
    f = upsilon_pl(_realize(args))
    if args.json:
        print(json.dumps(pl_to_json(f)))
    else:
        for t, v in f.breakpoints:
            print(f"{t}\t{v}")
    return 0


def _cmd_upsilon2(args) -> int:
    value = upsilon2(_realize(args), args.t, args.s)
    if args.json:
        print(json.dumps(ext_to_json(value)))
    else:
        print(format_ext(value))
    return 0


def _cmd_jumps(args) -> int:
    reports = jump_values(_realize(args), max_t=args.max_t)
    if args.json:
        print(json.dumps([
            {"t": rational_to_json(r.t), "is_jump": r.is_jump,
             "upsilon2": ext_to_json(r.upsilon2)}
            for r in reports
        ]))
    else:
        print("t\tjump\tupsilon2")
        for r in reports:
            print(f"{r.t}\t{'yes' if r.is_jump else 'no'}\t"
                  f"{format_ext(r.upsilon2)}")
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_all(fast=args.fast)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}")
    failed = sum(1 for r in results if not r.ok)
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def _cmd_dump(args) -> int:
    print(json.dumps(complex_to_json(_realize(args)), indent=2))
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "alexander": _cmd_alexander,
        "upsilon": _cmd_upsilon,
        "upsilon2": _cmd_upsilon2,
        "jumps": _cmd_jumps,
        "verify-paper": _cmd_verify,
        "dump-complex": _cmd_dump,
    }
    try:
        return handlers[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
