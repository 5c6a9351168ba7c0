"""Command line front end.

Exit codes: 0 success, 1 validation or parse error, 2 I/O error,
3 self-check failure.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .core import OutOfRange, make_triple
from .measures import parse_profile
from .norms import InvalidParameter, parse_family
from .records import FORMATS, ParseError, guess_format, parse_input
from .report import OPERATIONS, SCHEMES, MissingOperand, rank_document, run_analyze, run_logic, to_json
from .selfcheck import format_results, run_selfcheck

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2
EXIT_SELFCHECK = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _triple_arg(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected a triple T,I,F, got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"expected a triple of numbers, got {text!r}") from None
    return make_triple(*values)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="neutro", description="Multi-valued analysis of neutrosophic (T, I, F) triples.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_args(p):
        p.add_argument("--input", default="-", metavar="PATH", help="CSV or JSON-lines file; '-' reads stdin (default)")
        p.add_argument("--format", choices=FORMATS, help="input format (default: from the file extension, else csv)")
        p.add_argument("--out", metavar="PATH", help="write the JSON document here instead of stdout")
        p.add_argument("--profile", default="rational", help="definedness profile: rational, sine, quadratic, piecewise, sqrt")

    p = sub.add_parser("analyze", help="per-record scores, entropies and decompositions")
    io_args(p)
    p.add_argument("--tnorm", default="product", metavar="SPEC", help="recorded in the report metadata")

    p = sub.add_parser("rank", help="order records by neutrosophic score")
    io_args(p)

    p = sub.add_parser("logic", help="negation, union or intersection of decomposed triples")
    p.add_argument("--op", required=True, choices=OPERATIONS)
    p.add_argument("--scheme", required=True, choices=tuple(SCHEMES))
    p.add_argument("--tnorm", default="product", metavar="SPEC", help="godel, product, lukasiewicz or frank:<s>")
    p.add_argument("--profile", default="rational", help="definedness profile for penta-def")
    p.add_argument("--lhs", required=True, metavar="T,I,F")
    p.add_argument("--rhs", metavar="T,I,F")
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("selfcheck", help="verify the library invariants on seeded random inputs")
    p.add_argument("--samples", type=int, default=10000, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--tol", type=float, default=1e-9, metavar="X", help="partition tolerance")
    p.add_argument("--out", metavar="PATH")
    return parser


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _dispatch(args) -> int:
    if args.command == "selfcheck":
        if args.samples < 1:
            raise UsageError("--samples must be at least 1")
        if not args.tol > 0:
            raise UsageError("--tol must be positive")
        results = run_selfcheck(args.samples, args.seed, args.tol)
        _emit(format_results(results, args.samples, args.seed), args.out)
        return EXIT_OK if all(r.ok for r in results) else EXIT_SELFCHECK

    profile = parse_profile(args.profile)
    if args.command == "logic":
        family = parse_family(args.tnorm)
        lhs = _triple_arg(args.lhs)
        rhs = _triple_arg(args.rhs) if args.rhs is not None else None
        doc = run_logic(args.op, args.scheme, family, lhs, rhs, profile)
        _emit(to_json(doc), args.out)
        return EXIT_OK

    fmt = args.format or guess_format(args.input)
    if args.command == "analyze":
        family = parse_family(args.tnorm)
        doc = run_analyze(parse_input(args.input, fmt), profile, family)
    else:
        doc = rank_document(parse_input(args.input, fmt), profile)
    _emit(to_json(doc), args.out)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except OSError as err:
        print(f"neutro: error: {err}", file=sys.stderr)
        return EXIT_IO
    except (ParseError, OutOfRange, InvalidParameter, MissingOperand, UsageError, ValueError) as err:
        print(f"neutro: error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
