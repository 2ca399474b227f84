"""Batch command-line front end.

    tprime ideal build schur_weyl 1 1 --N 4 --out p11.json
    tprime ideal build prime_char0 "inf:1,head:1" --N 4
    tprime ideal op join a.json b.json
    tprime check verlinde --p 3
"""

from __future__ import annotations

import argparse
import datetime
import json
import math
import sys

from .checks import SUITES, RunConfig, run_suite
from .ideals import (BudgetExceeded, InductiveSystemTrunc, TruncatedIdeal, dagger, ideal_j_minus, ideal_j_plus,
                     ideal_of_phi, ideal_prime_char0, ideal_schur_weyl, ideal_unit, ideal_zero, join)
from .linalg import Field
from .partitions import InfPartition

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 4096 * 4096 * 8


class UsageError(Exception):
    pass


def parse_inf_partition(text: str) -> InfPartition:
    """``inf:1,head:3/1,tail:0`` or the JSON object form."""
    text = text.strip()
    if text.startswith("{"):
        return InfPartition.from_json(json.loads(text))
    fields = {"inf": "0", "head": "", "tail": "0"}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if ":" not in item:
            raise UsageError(f"bad label component {item!r}")
        k, v = item.split(":", 1)
        if k not in fields:
            raise UsageError(f"unknown label key {k!r}")
        fields[k] = v.strip()
    try:
        inf = math.inf if fields["inf"] == "inf" else int(fields["inf"])
        head = tuple(int(x) for x in fields["head"].replace("/", " ").replace(".", " ").split())
        tail = int(fields["tail"])
        return InfPartition(inf, head, tail)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def estimate_bytes(N: int) -> int:
    """Dense storage of one top-level basis: (N!)^2 entries of 8 bytes."""
    return math.factorial(N) ** 2 * 8


def build_ideal(args: list[str], field: Field, N: int) -> TruncatedIdeal:
    if not args:
        raise UsageError("missing constructor")
    head, rest = args[0], list(args[1:])
    if ":" in head:
        head, tail = head.split(":", 1)
        rest = [tail] + rest if head in ("prime_char0", "of_phi") else tail.split(",") + rest
    if head == "j_plus":
        return ideal_j_plus(N, field)
    if head == "j_minus":
        return ideal_j_minus(N, field)
    if head == "unit":
        return ideal_unit(N, field)
    if head == "zero":
        return ideal_zero(N, field)
    if head == "schur_weyl":
        if len(rest) != 2:
            raise UsageError("schur_weyl needs m and n")
        try:
            m, n = int(rest[0]), int(rest[1])
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if m < 0 or n < 0 or m + n == 0:
            raise UsageError("schur_weyl needs m, n >= 0 with m + n >= 1")
        return ideal_schur_weyl(m, n, N, field)
    if head == "prime_char0":
        if len(rest) != 1:
            raise UsageError("prime_char0 needs one label")
        if field.characteristic != 0:
            raise UsageError("prime_char0 is defined over Q only")
        return ideal_prime_char0(parse_inf_partition(rest[0]), N)
    if head == "of_phi":
        if len(rest) != 1:
            raise UsageError("of_phi needs one file")
        with open(rest[0]) as fh:
            phi = InductiveSystemTrunc.from_json(json.load(fh))
        if not phi.is_valid():
            raise UsageError("inductive system is not closed under restriction and induction")
        return ideal_of_phi(phi, min(N, phi.N))
    raise UsageError(f"unknown constructor {head!r}")


def load_ideal(path: str) -> TruncatedIdeal:
    with open(path) as fh:
        return TruncatedIdeal.from_json(json.load(fh))


def emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q or fp:<p>")
    common.add_argument("--N", type=int, default=None, help="level cap")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="memory budget in bytes")
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None)
    common.add_argument("--timestamp", action="store_true", help="add a generated_at header to reports")

    parser = argparse.ArgumentParser(prog="tprime", description="Truncated ideals of the infinite symmetric group")
    sub = parser.add_subparsers(dest="command", required=True)

    ideal = sub.add_parser("ideal", help="build or combine ideals")
    isub = ideal.add_subparsers(dest="ideal_command", required=True)
    b = isub.add_parser("build", parents=[common])
    b.add_argument("spec", nargs="+", help="constructor and parameters")
    o = isub.add_parser("op", parents=[common])
    o.add_argument("op", choices=("join", "dagger"))
    o.add_argument("lhs")
    o.add_argument("rhs")

    c = sub.add_parser("check", parents=[common])
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--p", type=int, default=None)
    c.add_argument("--ideal", default=None, help="P_m_n, J_plus, J_minus or unit")
    c.add_argument("--delta", default=None)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        field = Field.parse(args.field)
        if args.N is not None and args.N < 1:
            raise UsageError("--N must be at least 1")
        if args.budget <= 0:
            raise UsageError("--budget must be positive")
        if args.seed < 0 or args.seed >= 2 ** 64:
            raise UsageError("--seed must be an unsigned 64-bit integer")
        if args.command == "ideal":
            N = args.N or 4
            if args.ideal_command == "build":
                if estimate_bytes(N) > args.budget:
                    print(f"budget exceeded: level {N} needs about {estimate_bytes(N)} bytes", file=sys.stderr)
                    return EXIT_BUDGET
                ideal = build_ideal(args.spec, field, N)
            else:
                lhs, rhs = load_ideal(args.lhs), load_ideal(args.rhs)
                if estimate_bytes(max(lhs.N, rhs.N)) > args.budget:
                    print("budget exceeded", file=sys.stderr)
                    return EXIT_BUDGET
                try:
                    ideal = (join if args.op == "join" else dagger)(lhs, rhs)
                except ValueError as exc:
                    raise UsageError(f"mismatched inputs: {exc}") from exc
            emit(ideal.dumps() + "\n", args.out)
            return EXIT_OK
        options = {k: getattr(args, k) for k in ("p", "ideal", "delta") if getattr(args, k) is not None}
        if options.get("p") is not None and options["p"] not in (3, 5, 7, 11):
            from .linalg import is_prime
            if not is_prime(options["p"]) or options["p"] < 3:
                raise UsageError("--p must be an odd prime")
        cfg = RunConfig(field=field, N=args.N, budget=args.budget, seed=args.seed, options=options)
        report = run_suite(args.suite, cfg)
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat() if args.timestamp else None
        emit(report.render(args.format, stamp), args.out)
        return report.exit_code()
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
