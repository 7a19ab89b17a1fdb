"""Command-line interface.

Exit codes: 0 accepted / positive / success, 1 negative answer or failed
verification, 2 rejected input or usage error, 3 instance over the search
limit. The first stdout line is always the verdict.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import codec
from .generate import random_cnf, random_decomposition
from .reduce import r1_total, r2_total
from .solve import COVER_ENGINES, SAT_ENGINES, GuardLimitError
from .verify import FAULTS, run_verify

EXIT_OK, EXIT_NEGATIVE, EXIT_REJECT, EXIT_LIMIT = 0, 1, 2, 3


class _Reject(Exception):
    pass


def _read_input(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text(encoding="ascii").strip()
        except (OSError, UnicodeDecodeError) as exc:
            raise _Reject(f"cannot read {arg[1:]}: {exc}") from exc
    return arg


def _kind(text: str, forced: Optional[str]) -> str:
    kind = forced or codec.detect_kind(text)
    if kind is None:
        raise _Reject("unrecognized input: expected a formula (x...) or a decomposition (e... or ~...)")
    return kind


def _reject_line(exc: codec.ParseError) -> str:
    return f"REJECT {exc.reason} [{exc.rule}, check {exc.check}, offset {exc.offset}]"


def cmd_validate(args) -> int:
    text = _read_input(args.input)
    kind = _kind(text, args.kind)
    try:
        if kind == "cnf":
            f = codec.parse_cnf(text)
            print(f"CNF n={f.n} m={f.m}")
        else:
            d = codec.parse_decomp(text)
            print(f"DECOMP n={d.n} m={d.m}")
    except codec.ParseError as exc:
        print(_reject_line(exc))
        return EXIT_REJECT
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read_input(args.input)
    out = r1_total(text) if args.dir == "cnf2dec" else r2_total(text)
    print(out.text)
    if out.sentinel:
        print(f"rejected: {out.error}", file=sys.stderr)
        return EXIT_REJECT
    return EXIT_OK


def cmd_solve(args) -> int:
    text = _read_input(args.input)
    wanted = "cnf" if args.engine in SAT_ENGINES else "decomp"
    kind = _kind(text, args.kind)
    if kind != wanted:
        raise _Reject(f"engine {args.engine} solves {wanted} inputs, got {kind}")
    try:
        if kind == "cnf":
            result = SAT_ENGINES[args.engine](codec.parse_cnf(text))
        else:
            result = COVER_ENGINES[args.engine](codec.parse_decomp(text))
    except codec.ParseError as exc:
        print(_reject_line(exc))
        return EXIT_REJECT
    print(result.line())
    print(f"nodes={result.nodes} inferences={result.inferences}", file=sys.stderr)
    return EXIT_OK if result.positive else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    if args.count < 0:
        raise _Reject("--count must be non-negative")
    if args.count == 0:
        print("warning: count=0, nothing was checked", file=sys.stderr)
    forward, backward = FAULTS[args.fault]
    try:
        report = run_verify(args.count, args.seed, args.n_max, args.m_max, forward, backward)
    except ValueError as exc:
        if isinstance(exc, GuardLimitError):
            raise
        raise _Reject(str(exc)) from exc
    print(report.summary())
    for line in report.failures:
        print(f"FAIL {line}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_gen(args) -> int:
    try:
        if args.kind == "cnf":
            print(codec.serialize_cnf(random_cnf(args.seed, args.n, args.m)))
        else:
            print(codec.serialize_decomp(random_decomposition(args.seed, args.n, args.m)))
    except ValueError as exc:
        raise _Reject(str(exc)) from exc
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specialcover", description="Formulas, paired decompositions, and the reductions between them."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check membership in the formula or decomposition language")
    p.add_argument("input", help="string, or @path to read it from a file")
    p.add_argument("--kind", choices=["cnf", "decomp"])
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("reduce", help="map a formula to a decomposition or back")
    p.add_argument("--dir", required=True, choices=["cnf2dec", "dec2cnf"])
    p.add_argument("input")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="decide satisfiability or covering existence")
    p.add_argument("--engine", required=True, choices=[*SAT_ENGINES, *COVER_ENGINES])
    p.add_argument("--kind", choices=["cnf", "decomp"])
    p.add_argument("input")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="fuzz both reductions against the solvers")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--fault", choices=sorted(FAULTS), default="none", help="inject a broken reduction")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="emit a random valid instance")
    p.add_argument("--kind", required=True, choices=["cnf", "decomp"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardLimitError as exc:
        print(f"LIMIT {exc}")
        return EXIT_LIMIT
    except _Reject as exc:
        print(f"ERROR {exc}")
        return EXIT_REJECT


if __name__ == "__main__":
    sys.exit(main())
