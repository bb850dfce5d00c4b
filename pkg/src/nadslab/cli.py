"""Command-line front end.

    nadslab verify {claim1,claim2,claim3,example1,banks,all} [--resolution L] [--n N] [--k K] [--point P]
    nadslab emit {thue-morse,schedule,shift-amounts,exponents} --length L
    nadslab witness --point P --m M

Exit codes: 0 every check passed, 1 a check was falsified, 2 invalid
parameters, 3 the materialization cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checkers
from .config import CapExceeded, cap_limit
from .report import Certificate, render_text
from .rotation import telescoping_certificate
from .schedules import quad_exponent, shift_amounts
from .shift import Point, format_fraction
from .words import thue_morse_prefix

EXIT_OK, EXIT_FALSIFIED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--out", type=Path, help="also write the structured report to FILE")
    common.add_argument("--cap", type=int, help="materialization cap in symbols (default from NADSLAB_CAP)")

    parser = argparse.ArgumentParser(prog="nadslab", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="run a verification and print its report")
    verify.add_argument("target", choices=["claim1", "claim2", "claim3", "example1", "banks", "all"])
    verify.add_argument("--resolution", type=int, default=None, help="cylinder length L")
    verify.add_argument("--n", type=int, default=None, help="Thue-Morse block index")
    verify.add_argument("--k", type=int, default=None, help="periodicity horizon")
    verify.add_argument("--point", help='point in u(v) syntax, e.g. "0(10)"')

    emit = sub.add_parser("emit", parents=[common], help="print a raw sequence")
    emit.add_argument("what", choices=["thue-morse", "schedule", "shift-amounts", "exponents"])
    emit.add_argument("--length", type=int, required=True)

    witness = sub.add_parser("witness", parents=[common], help="sensitivity witness near a point")
    witness.add_argument("--point", required=True)
    witness.add_argument("--m", type=int, required=True)
    return parser


def _point(text: str) -> Point:
    try:
        return Point.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _non_negative(name: str, value: int | None) -> None:
    if value is not None and value < 0:
        raise UsageError(f"--{name} must be non-negative")


def run_verify(args) -> Certificate:
    for name in ("resolution", "n", "k"):
        _non_negative(name, getattr(args, name))
    target = args.target
    if target == "claim1":
        return checkers.mixing_all_pairs(4 if args.resolution is None else args.resolution)
    if target == "claim2":
        n = 3 if args.n is None else args.n
        k = 50 if args.k is None else args.k
        if n < 1:
            raise UsageError("--n must be >= 1")
        if args.point:
            return checkers.verify_claim2(_point(args.point), n, k)[1]
        resolution = 6 if args.resolution is None else args.resolution
        if 3 * (1 << (n - 1)) < resolution:
            raise UsageError("need 3|A_n| >= resolution")
        return checkers.dense_periodic_points(resolution, n, k)
    if target == "claim3":
        return checkers.verify_claim3(1000 if args.k is None else args.k)
    if target == "example1":
        return telescoping_certificate(horizon=1000 if args.k is None else args.k)

    resolution = 6 if args.resolution is None else args.resolution
    n = checkers.default_block_index(resolution) if args.n is None else args.n
    k = 50 if args.k is None else args.k
    if n < 1 or 3 * (1 << (n - 1)) < resolution:
        raise UsageError("need n >= 1 and 3|A_n| >= resolution")
    if target == "banks":
        return checkers.banks_hypotheses_report(resolution, n, k)
    return checkers.verify_all(resolution, n, k)


def run_emit(args) -> list:
    length = args.length
    if length < 0:
        raise UsageError("--length must be non-negative")
    if args.what == "thue-morse":
        return [thue_morse_prefix(length).bits]
    if args.what == "schedule":
        # sigma power applied at each step
        return [1 + int(b) for b in thue_morse_prefix(length).bits]
    if args.what == "shift-amounts":
        return shift_amounts(length)[1:]
    return [quad_exponent(i) for i in range(1, length + 1)]


def _emit_output(args, values: list) -> str:
    if args.format == "structured":
        return json.dumps({"what": args.what, "length": args.length, "values": values}, sort_keys=True) + "\n"
    return " ".join(map(str, values)) + "\n"


def main(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if args.cap is not None and args.cap < 0:
        parser.error("--cap must be non-negative")
    try:
        if args.cap is not None:
            with cap_limit(args.cap):
                return _dispatch(args)
        return _dispatch(args)
    except UsageError as exc:
        print(f"nadslab: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceeded as exc:
        print(f"nadslab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


def _dispatch(args) -> int:
    if args.command == "emit":
        values = run_emit(args)
        text = _emit_output(args, values)
        sys.stdout.write(text)
        if args.out:
            args.out.write_text(_emit_output(argparse.Namespace(**{**vars(args), "format": "structured"}), values))
        return EXIT_OK

    if args.command == "witness":
        if args.m < 1:
            raise UsageError("--m must be >= 1")
        cert = checkers.sensitivity_certificate(_point(args.point), args.m)
        if args.format == "text":
            w = cert.witnesses[0]
            sys.stdout.write(
                f"y = {w['y']}\nn = {w['n']}\n"
                f"d(x, y) = {format_fraction(w['pre_distance'])}\n"
                f"d(g(x), g(y)) after n steps = {format_fraction(w['post_distance'])}\n"
            )
    else:
        cert = run_verify(args)
        if args.format == "text":
            sys.stdout.write(render_text(cert) + "\n")

    if args.format == "structured":
        sys.stdout.write(cert.to_json())
    if args.out:
        args.out.write_text(cert.to_json(), encoding="utf-8")
    return EXIT_OK if cert.passed else EXIT_FALSIFIED


if __name__ == "__main__":
    sys.exit(main())
