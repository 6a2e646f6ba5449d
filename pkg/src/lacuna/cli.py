"""Command-line interface: ``lacuna stirling|adelberg|table|verify``.

Exit status is 0 on success, 1 when any verified row fails or errors, and 2
on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from lacuna.adelberg import a_poly, a_value, b_poly, b_value
from lacuna.exactnum import DomainError, format_int, format_rational, is_prime
from lacuna.stirling import stirling1, stirling1_mod_p, stirling2, stirling_row_mod
from lacuna.sweep import TARGETS, SweepSpec, format_rows, run_sweep

TABLE_ROWS = {1: ("B", 4), 2: ("A", 3)}
VERIFY_TARGETS = ("cong1", "cong2", "cong3", "identity33", "cor34", "classical", "rewrite")
RANGE_FLAGS = ("p", "m", "l", "s", "n", "k", "h", "q", "r")


def parse_range(text: str) -> range:
    """Parse "a..b" (inclusive) or a single integer "a"."""
    lo, sep, hi = text.partition("..")
    try:
        start = int(lo)
        stop = int(hi) if sep else start
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b range, got {text!r}")
    if stop < start:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(start, stop + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lacuna",
        description="Exact Stirling numbers, Adelberg polynomials and lacunary congruence checks.",
    )
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv",
                        help="output format for verify sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("stirling", help="exact Stirling number or its residue")
    st.add_argument("--kind", type=int, choices=(1, 2), required=True)
    st.add_argument("--mod", type=int, metavar="P", help="reduce modulo the prime P")
    st.add_argument("n", type=int)
    st.add_argument("k", type=int)

    ad = sub.add_parser("adelberg", help="Adelberg polynomials")
    ad_sub = ad.add_subparsers(dest="action", required=True)
    poly = ad_sub.add_parser("poly", help="print the expanded polynomial")
    poly.add_argument("--family", choices=("A", "B"), required=True)
    poly.add_argument("--u", type=int, required=True)
    ev = ad_sub.add_parser("eval", help="evaluate at integers")
    ev.add_argument("--family", choices=("A", "B"), required=True)
    ev.add_argument("--u", type=int, required=True)
    ev.add_argument("--x", type=int, default=0)
    ev.add_argument("--y", type=int, required=True)
    ev.add_argument("--m", type=int, required=True)

    tb = sub.add_parser("table", help="reproduce the tables of B and A polynomials")
    tb.add_argument("which", type=int, choices=(1, 2))

    vf = sub.add_parser(
        "verify", help="run a verification sweep",
        epilog="Ranges are a..b (inclusive) or a single integer; "
               "write negative ranges as --m=-5..5.",
    )
    vf.add_argument("target", choices=VERIFY_TARGETS)
    for name in RANGE_FLAGS:
        vf.add_argument(f"--{name}", type=parse_range, metavar="A..B")
    vf.add_argument("--kind", choices=("glaisher", "fleck", "wan", "suntauraso"),
                    help="classical congruence to check")
    vf.add_argument("--form", type=int, choices=(1, 2), help="lacunary rewrite form")
    vf.add_argument("--strict", action="store_true",
                    help="error on composite primes and out-of-domain tuples instead of skipping")
    vf.add_argument("--jobs", type=int, default=1, help="worker processes")
    vf.add_argument("--format", choices=("tsv", "json"), default=argparse.SUPPRESS)
    return parser


def _target_key(args: argparse.Namespace, parser: argparse.ArgumentParser) -> str:
    if args.target == "classical":
        if args.kind is None:
            parser.error("verify classical requires --kind")
        return f"classical:{args.kind}"
    if args.kind is not None:
        parser.error(f"--kind does not apply to verify {args.target}")
    if args.target == "rewrite":
        if args.form is None:
            parser.error("verify rewrite requires --form")
        return f"rewrite{args.form}"
    if args.form is not None:
        parser.error(f"--form does not apply to verify {args.target}")
    if args.target == "cong1" and args.n is not None:
        return "cong1n"
    return args.target


def _verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    key = _target_key(args, parser)
    target = TARGETS[key]
    ranges = {}
    for name in RANGE_FLAGS:
        value = getattr(args, name)
        if value is None:
            continue
        if name not in target.params:
            parser.error(f"--{name} does not apply to verify {args.target}")
        ranges[name] = value
    spec = SweepSpec(key, ranges, args.format, args.strict)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        rows = run_sweep(spec, jobs=args.jobs)
    except DomainError as exc:
        parser.error(str(exc))
    sys.stdout.write(format_rows(spec, rows))
    for row in rows:
        if row.error:
            print(f"error at {row.params}: {row.error}", file=sys.stderr)
    return 0 if all(row.ok for row in rows) else 1


def emit_table(which: int) -> str:
    family, top = TABLE_ROWS[which]
    make = b_poly if family == "B" else a_poly
    return "".join(f"{u}\t{make(u)}\n" for u in range(top + 1))


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    if args.command == "stirling":
        if args.n < 0:
            parser.error("N must be nonnegative")
        if args.mod is None:
            value = (stirling1 if args.kind == 1 else stirling2)(args.n, args.k)
        else:
            if not is_prime(args.mod):
                parser.error(f"--mod must be prime, got {args.mod}")
            if not 0 <= args.k <= args.n:
                value = 0
            elif args.kind == 1:
                value = stirling1_mod_p(args.n, args.k, args.mod)
            else:
                value = stirling_row_mod(2, args.n, args.mod)[args.k]
        out.write(format_int(value) + "\n")
        return 0

    if args.command == "adelberg":
        if args.u < 0:
            parser.error("--u must be nonnegative")
        if args.action == "poly":
            out.write(f"{(b_poly if args.family == 'B' else a_poly)(args.u)}\n")
        elif args.family == "B":
            out.write(format_rational(b_value(args.u, args.y, args.m)) + "\n")
        else:
            out.write(format_rational(a_value(args.u, args.x, args.y, args.m)) + "\n")
        return 0

    if args.command == "table":
        out.write(emit_table(args.which))
        return 0

    return _verify(args, parser)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
