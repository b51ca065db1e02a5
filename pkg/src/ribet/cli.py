"""Command line entry point.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import DEFAULT_PRECISION
from .bernoulli import bernoulli_number, scan_irregular
from .characters import carlitz_check, relative_class_number
from .eisenstein import eis_G1_char, eis_G2_char, eis_G2_level_p, eis_s2_char, embedded_Gk
from .errors import RibetError
from .pipeline import DEFAULT_L_BOUND, check_lemma31, ribet_construct
from .qseries import DEFAULT_TRUNCATION, MAX_TRUNCATION

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SERIES = {
    "G2eps": lambda p, k, M, A: eis_G2_char(p, k - 2, M, A),
    "s2eps": lambda p, k, M, A: eis_s2_char(p, k - 2, M, A),
    "G1eps": lambda p, k, M, A: eis_G1_char(p, k - 1, M, A),
    "Gk": lambda p, k, M, A: embedded_Gk(p, k, M, A),
    "G2p": lambda p, k, M, A: eis_G2_level_p(p, M).embed(p, A),
}


def _truncation(text: str) -> int:
    M = int(text)
    if not 1 <= M <= MAX_TRUNCATION:
        raise argparse.ArgumentTypeError(f"--coeffs must be in [1, {MAX_TRUNCATION}]")
    return M


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _add_series_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--coeffs", type=_truncation, default=DEFAULT_TRUNCATION, metavar="M")
    sp.add_argument("--precision", type=_positive, default=DEFAULT_PRECISION, metavar="A")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("bernoulli", help="print the exact Bernoulli number B_N")
    sp.add_argument("n", type=int, metavar="N")

    sp = sub.add_parser("scan", help="list irregular pairs (p, k) with p < bound")
    sp.add_argument("--bound", type=int, required=True)

    sp = sub.add_parser("classnumber", help="relative class number of Q(mu_p)")
    sp.add_argument("-p", type=int, required=True)

    sp = sub.add_parser("carlitz", help="check t < (p-1)/4 and p^t | h^-")
    sp.add_argument("-p", type=int, required=True)

    sp = sub.add_parser("series", help="dump a q-expansion as JSON")
    sp.add_argument("name", choices=sorted(SERIES))
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-k", type=int, default=4)
    _add_series_opts(sp)

    sp = sub.add_parser("construct", help="run the full construction for an irregular pair")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    _add_series_opts(sp)
    sp.add_argument("--l-bound", type=int, default=DEFAULT_L_BOUND)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.add_argument("--out", type=Path)

    sp = sub.add_parser("verify", help="run a named verification")
    sp.add_argument("what", choices=["lemma31"])
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    _add_series_opts(sp)
    return parser


def _emit(text: str, out: Path | None = None) -> None:
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n", encoding="utf-8")


def _run(args) -> int:
    if args.command == "bernoulli":
        if args.n < 0:
            raise ValueError("N must be non-negative")
        print(bernoulli_number(args.n))
        return EXIT_OK

    if args.command == "scan":
        pairs = scan_irregular(args.bound)
        print(json.dumps([list(pr.as_tuple()) for pr in pairs]))
        return EXIT_OK

    if args.command == "classnumber":
        print(json.dumps(relative_class_number(args.p).as_dict(), indent=2))
        return EXIT_OK

    if args.command == "carlitz":
        rep = relative_class_number(args.p)
        ok = carlitz_check(args.p)
        print(json.dumps({**rep.as_dict(), "carlitz_check": ok}, indent=2))
        return EXIT_OK if ok else EXIT_FAIL

    if args.command == "series":
        f = SERIES[args.name](args.p, args.k, args.coeffs, args.precision)
        print(f.to_json())
        return EXIT_OK

    if args.command == "construct":
        report = ribet_construct(args.p, args.k, args.coeffs, args.precision, args.l_bound)
        _emit(report.to_json() if args.format == "json" else report.to_text(), args.out)
        return EXIT_OK if report.overall_pass else EXIT_FAIL

    if args.command == "verify":
        verdicts = check_lemma31(args.p, args.k, args.coeffs, args.precision)
        out = {name: {"ok": ok, "first_failure": idx} for name, (ok, idx) in verdicts.items()}
        print(json.dumps({"p": args.p, "k": args.k, "truncation": args.coeffs, **out}, indent=2))
        return EXIT_OK if all(ok for ok, _ in verdicts.values()) else EXIT_FAIL

    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _run(args)
    except (RibetError, ValueError) as exc:
        print(f"ribet {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
