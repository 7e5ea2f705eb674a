"""Command-line front end.

Subcommands mirror the library: enumerate, a-value, symbol, a-seq, a-graph,
crystal, bijection, canonical, decomp, typeb, verify.  Charge parameters
come from --d/--e/--charges with an optional --shift override of the
minimal weight shift.  Exit codes: 0 success, 1 internal assertion failure,
2 invalid parameters.  ARIKI_THREADS caps worker parallelism; output is
byte-identical regardless.
"""

import argparse
import sys

from . import render
from .charge import ChargeParams
from .partitions import parse_multipartition
from .verification import RankCaps, run_all


def _add_charge_args(sub, shift_flag=True):
    sub.add_argument("--d", type=int, default=1, help="number of components")
    sub.add_argument("--e", type=int, required=True, help="order of the root of unity")
    sub.add_argument("--charges", default="0",
                     help="comma-separated charges 0 <= v_0 <= ... < e")
    if shift_flag:
        sub.add_argument("--shift", type=int, default=None,
                         help="weight shift s (default: minimal nonnegative)")


def _charge_params(args) -> ChargeParams:
    try:
        v = tuple(int(x) for x in args.charges.split(","))
    except ValueError:
        raise ValueError(f"cannot parse charges {args.charges!r}")
    return ChargeParams(args.d, args.e, v, getattr(args, "shift", None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ariki",
        description="Exact crystal, a-function and canonical-basis computations "
                    "for Ariki-Koike algebras at roots of unity.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("enumerate", help="list all d-partitions of rank n")
    sub.add_argument("--d", type=int, default=1)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = subs.add_parser("a-value", help="a-value of a multipartition")
    _add_charge_args(sub)
    sub.add_argument("--mp", required=True, help='multipartition, e.g. "2.2,2.2.1"')

    sub = subs.add_parser("symbol", help="ordinary and weight-shifted symbol")
    _add_charge_args(sub, shift_flag=False)
    sub.add_argument("--mp", required=True)
    sub.add_argument("--shift", dest="symbol_shift", type=int, default=0,
                     help="extra symbol height (default 0)")

    sub = subs.add_parser("a-seq", help="residue sequence of a diagonal-crystal vertex")
    _add_charge_args(sub)
    sub.add_argument("--mp", required=True)

    sub = subs.add_parser("a-graph", help="optimal-addition chain of a vertex")
    _add_charge_args(sub)
    sub.add_argument("--mp", required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = subs.add_parser("crystal", help="crystal graph up to rank n")
    _add_charge_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--order", choices=("am", "flotw"), default="flotw")
    sub.add_argument("--dot", action="store_true", help="emit a DOT digraph")

    sub = subs.add_parser("bijection", help="crystal bijection image of a vertex")
    _add_charge_args(sub)
    sub.add_argument("--mp", required=True)
    sub.add_argument("--inverse", action="store_true",
                     help="map a diagonal-crystal label back instead")

    sub = subs.add_parser("canonical", help="canonical basis at rank n")
    _add_charge_args(sub)
    sub.add_argument("--n", type=int, required=True)

    sub = subs.add_parser("decomp", help="decomposition matrix at rank n")
    _add_charge_args(sub)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = subs.add_parser("typeb", help="type B basic sets, a-values, matrices")
    sub.add_argument("action", choices=("basic-set", "a-values", "decomp"))
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--e", type=int, required=True)
    sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = subs.add_parser("verify", help="run the invariant suite")
    sub.add_argument("--quick", action="store_true", help="lower all rank caps")
    sub.add_argument("--rank-cap", type=int, default=None,
                     help="clamp every rank ceiling to at most this value")

    return parser


def run(args) -> int:
    out = sys.stdout
    cmd = args.command
    if cmd == "enumerate":
        out.write(render.render_enumerate(args.d, args.n, args.format))
    elif cmd == "a-value":
        p = _charge_params(args)
        out.write(render.render_a_value(p, parse_multipartition(args.mp)))
    elif cmd == "symbol":
        p = _charge_params(args)
        mc = parse_multipartition(args.mp, require_partitions=False)
        out.write(render.render_symbol(p, mc, args.symbol_shift))
    elif cmd == "a-seq":
        p = _charge_params(args)
        out.write(render.render_a_seq(p, parse_multipartition(args.mp)))
    elif cmd == "a-graph":
        p = _charge_params(args)
        out.write(render.render_a_graph(p, parse_multipartition(args.mp), args.format))
    elif cmd == "crystal":
        p = _charge_params(args)
        fmt = "dot" if args.dot else "json"
        out.write(render.render_crystal(p, args.n, args.order, fmt))
    elif cmd == "bijection":
        p = _charge_params(args)
        out.write(render.render_bijection(p, parse_multipartition(args.mp), args.inverse))
    elif cmd == "canonical":
        p = _charge_params(args)
        out.write(render.render_canonical(p, args.n))
    elif cmd == "decomp":
        p = _charge_params(args)
        out.write(render.render_decomp(p, args.n, args.format))
    elif cmd == "typeb":
        out.write(render.render_typeb(args.n, args.e, args.action, args.format))
    elif cmd == "verify":
        caps = RankCaps.quick() if args.quick else RankCaps()
        if args.rank_cap is not None:
            caps = caps.clamped(args.rank_cap)
        if not run_all(caps, report=lambda line: out.write(line + "\n")):
            return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        # values like "-,1.1" must be passed as --mp=-,1.1
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
