"""Command-line front end.

Every verb maps to exactly one library operation; results print as
canonical set literals (or JSON with --json) on stdout, with nothing
else on the success stream.  Exit codes: 0 success, 1 domain/range
error, 2 usage or parse error.
"""

import argparse
import json
import sys
from dataclasses import asdict

from . import adder, explorer
from .bitset import decode, encode, format, parse
from .errors import RangeError, SetLiteralError
from .magma import invert, oplus, solve, stretch

EXIT_OK = 0
EXIT_RANGE = 1
EXIT_USAGE = 2


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carrymagma",
        description="One-round carry-approximation algebra on finite sets "
                    "of naturals.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit a JSON object instead of plain text")
        return p

    p = add("oplus", "combine two sets with one carry round")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = add("invert", "the set X with A oplus X = {}")
    p.add_argument("a", metavar="A")

    p = add("solve", "the set X with A oplus X = B")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")

    p = add("stretch", "length of the run of members of A ending at N")
    p.add_argument("a", metavar="A")
    p.add_argument("n", metavar="N", type=_natural)

    p = add("orbit", "left-iterates A, A+A, (A+A)+A, ... under oplus")
    p.add_argument("a", metavar="A")
    p.add_argument("--iterations", type=_natural, required=True, metavar="K",
                   help="number of iterates to print")

    p = add("assoc", "compare the two association orders of a triple")
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")
    p.add_argument("c", metavar="C")

    p = add("scan-assoc", "exhaustive associativity scan over a universe")
    p.add_argument("--bound", type=_natural, required=True, metavar="N",
                   help="universe is the power set of [0, N)")

    p = add("search-subgroups", "classify subsets containing {} (JSON lines)")
    p.add_argument("--bound", type=_natural, required=True, metavar="N",
                   help="universe is the power set of [0, N)")
    p.add_argument("--max-size", type=_natural, default=None, metavar="M",
                   help="largest candidate size (default: whole universe)")

    p = add("adder-stats", "exhaustive one-round adder statistics")
    p.add_argument("width", type=_natural, metavar="WIDTH",
                   help="operands range over [0, 2**WIDTH)")

    p = add("encode", "the set as a binary integer (sum of 2**n)")
    p.add_argument("a", metavar="A")

    p = add("decode", "the set of bit positions set in an integer")
    p.add_argument("m", metavar="M", type=_natural)

    return parser


def _emit(args, plain: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print(plain)


def _run_verb(args) -> int:
    verb = args.verb
    if verb == "oplus":
        result = oplus(parse(args.a), parse(args.b))
        _emit(args, format(result), {"result": format(result)})
    elif verb == "invert":
        result = invert(parse(args.a))
        _emit(args, format(result), {"result": format(result)})
    elif verb == "solve":
        result = solve(parse(args.a), parse(args.b))
        _emit(args, format(result), {"result": format(result)})
    elif verb == "stretch":
        value = stretch(parse(args.a), args.n)
        _emit(args, str(value), {"result": value})
    elif verb == "orbit":
        sets = explorer.orbit(parse(args.a), args.iterations)
        _emit(args, "\n".join(format(s) for s in sets),
              {"result": [format(s) for s in sets]})
    elif verb == "assoc":
        witness = explorer.assoc_witness(parse(args.a), parse(args.b),
                                         parse(args.c))
        if witness is None:
            _emit(args, "associative", {"associative": True, "witness": None})
        else:
            _emit(args,
                  f"non-associative left={format(witness.left)} "
                  f"right={format(witness.right)}",
                  {"associative": False,
                   "witness": explorer.witness_as_dict(witness)})
    elif verb == "scan-assoc":
        scan = explorer.scan_associativity(args.bound)
        witness = (None if scan.first_witness is None
                   else explorer.witness_as_dict(scan.first_witness))
        plain = [f"total_triples: {scan.total_triples}",
                 f"failing_triples: {scan.failing_triples}"]
        if witness is not None:
            plain.append("first_witness: " + " ".join(
                f"{key}={value}" for key, value in witness.items()))
        _emit(args, "\n".join(plain),
              {"bound": args.bound, "total_triples": scan.total_triples,
               "failing_triples": scan.failing_triples,
               "first_witness": witness})
    elif verb == "search-subgroups":
        max_size = args.max_size
        if max_size is None:
            max_size = 1 << args.bound
        reports = explorer.search_closed_subsets(args.bound, max_size)
        for report in reports:
            print(json.dumps(explorer.report_as_dict(report)))
        print(json.dumps(explorer.search_summary(reports)))
    elif verb == "adder-stats":
        stats = adder.approx_stats(args.width)
        print(json.dumps(asdict(stats)))
    elif verb == "encode":
        value = encode(parse(args.a))
        _emit(args, str(value), {"result": value})
    elif verb == "decode":
        result = decode(args.m)
        _emit(args, format(result), {"result": format(result)})
    else:  # pragma: no cover - argparse rejects unknown verbs first
        raise AssertionError(f"unhandled verb {verb!r}")
    return EXIT_OK


def run(argv: list[str]) -> int:
    """Parse argv, dispatch, print, and return the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run_verb(args)
    except SetLiteralError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(f"carrymagma {args.verb}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RangeError as exc:
        print(f"carrymagma {args.verb}: {exc}", file=sys.stderr)
        return EXIT_RANGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
