"""Command-line front end.

A thin client over the service handlers: each subcommand marshals its
files into the request schema, calls the handler in process, and renders
the response.  Exit codes: 0 success, 2 parse or parameter error, 3
invariant violation under --check, 4 invalid allocation, 5 oracle guard
exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import FormatError, InvariantViolation, OracleTooLarge
from .service import handlers
from .service.models import (
    GenerateRequest,
    OracleRequest,
    SolveRequest,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_INVALID = 4
EXIT_TOO_LARGE = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsw2v",
        description="Exact Nash social welfare maximization for two-value instances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance", help="path to the instance file")
    solve.add_argument("--check", action="store_true", help="re-validate invariants")
    solve.add_argument("--out", help="also write the allocation to this path")

    verify = sub.add_parser("verify", help="validate an allocation against an instance")
    verify.add_argument("instance")
    verify.add_argument("allocation")

    gen = sub.add_parser("gen", help="print a pseudo-random instance")
    gen.add_argument("--agents", type=int, required=True)
    gen.add_argument("--goods", type=int, required=True)
    gen.add_argument("--s", default="3/2", help="heavy value as p/2, p odd >= 3")
    gen.add_argument("--heavy-prob", default="0.5", help="H probability, exact decimal or fraction")
    gen.add_argument("--seed", type=int, default=0)

    oracle = sub.add_parser("oracle", help="brute-force a small instance")
    oracle.add_argument("instance")
    oracle.add_argument("--against", help="allocation file to compare with the optimum")

    return parser


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _cmd_solve(args) -> int:
    try:
        text = _read(args.instance)
        response = handlers.solve(SolveRequest(instance=text, check=args.check))
    except OSError as exc:
        return _fail(str(exc), EXIT_PARSE)
    except FormatError as exc:
        return _fail(str(exc), EXIT_PARSE)
    except InvariantViolation as exc:
        return _fail(str(exc), EXIT_INVARIANT)
    sys.stdout.write(response.allocation)
    print("profile:", " ".join(response.profile))
    print("nsw:", response.nsw)
    if args.out:
        Path(args.out).write_text(response.allocation, encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        instance = _read(args.instance)
        allocation = _read(args.allocation)
        response = handlers.verify(
            VerifyRequest(instance=instance, allocation=allocation)
        )
    except (OSError, FormatError) as exc:
        return _fail(str(exc), EXIT_PARSE)
    if not response.valid:
        print(f"invalid: {response.violation}")
        return EXIT_INVALID
    print("profile:", " ".join(response.profile))
    print("nsw:", response.nsw)
    return EXIT_OK


def _cmd_gen(args) -> int:
    request = GenerateRequest(
        agents=args.agents,
        goods=args.goods,
        s=args.s,
        heavy_prob=args.heavy_prob,
        seed=args.seed,
    )
    try:
        response = handlers.generate(request)
    except ValueError as exc:
        return _fail(str(exc), EXIT_PARSE)
    sys.stdout.write(response.instance)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        instance = _read(args.instance)
        against = _read(args.against) if args.against else None
        response = handlers.oracle(OracleRequest(instance=instance, against=against))
    except (OSError, FormatError) as exc:
        return _fail(str(exc), EXIT_PARSE)
    except OracleTooLarge as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    print("profile:", " ".join(response.profile))
    print("nsw:", response.nsw)
    if response.comparison is not None:
        print(response.comparison)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    command = {
        "solve": _cmd_solve,
        "verify": _cmd_verify,
        "gen": _cmd_gen,
        "oracle": _cmd_oracle,
    }[args.command]
    return command(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
