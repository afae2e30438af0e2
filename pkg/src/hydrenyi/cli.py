"""Command-line front-end.

Subcommands: compute (entropies of one state), table (the published q = 2
hydrogen tables), verify (closed form vs oracle sweep), sum (uncertainty
sum against its dimensional bound).  Output is JSON by default, CSV behind
--format=csv.  Exit codes: 0 ok, 1 verification failure, 2 usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from hydrenyi import entropy, oracle
from hydrenyi.exactnum import DEFAULT_PRECISION_BITS
from hydrenyi.hyperfun import HypergeometricSpecError, TermBudgetExceeded
from hydrenyi.states import (
    HydrogenicState,
    ValidationError,
    enumerate_states,
    validate,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _parse_q(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse q={text!r}: {exc}") from exc
    if q <= 0:
        raise UsageError(f"q must be positive, got {q}")
    if q == 1:
        raise UsageError("q = 1 (the Shannon limit) is outside the computable range")
    return q


def _parse_state(text: str) -> HydrogenicState:
    state = HydrogenicState.parse(text)
    validate(state)
    return state


def _emit(records: list[dict], fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(records, stream, sort_keys=True, indent=2)
        stream.write("\n")
        return
    if fmt == "csv":
        columns: list[str] = []
        for record in records:
            for key in record:
                if key not in columns:
                    columns.append(key)
        writer = csv.DictWriter(stream, fieldnames=columns, restval="")
        writer.writeheader()
        writer.writerows(records)
        return
    raise UsageError(f"unknown format {fmt!r}")


def _compute_records(
    state: HydrogenicState, q: Fraction, spaces: list[str], use_float: bool, bits: int
) -> list[dict]:
    records = []
    for space in spaces:
        if use_float:
            result = oracle.renyi_float(state, q, space)  # type: ignore[arg-type]
            records.append(
                {
                    "state": state.literal(),
                    "space": space,
                    "q": str(q),
                    "entropy": result.value,
                    "error": result.error,
                    "provenance": "oracle-float",
                }
            )
            continue
        if q.denominator != 1 or q < 2:
            raise UsageError(
                f"exact closed forms need an integer q >= 2 (got {q}); pass --float"
            )
        breakdown = (
            entropy.position_entropy(state, int(q))
            if space == "position"
            else entropy.momentum_entropy(state, int(q))
        )
        total = breakdown.total
        records.append(
            {
                "state": state.literal(),
                "space": space,
                "q": str(q),
                "w": total.w.render(),
                "entropy_exact": total.exact_str(),
                "entropy": total.value_at(bits),
                "radial_exact": breakdown.radial.exact_str(),
                "angular_exact": breakdown.angular.exact_str(),
                "provenance": "closed-form",
            }
        )
    return records


def cmd_compute(args) -> int:
    state = _parse_state(args.state)
    q = _parse_q(args.q)
    spaces = ["position", "momentum"] if args.space == "both" else [args.space]
    records = _compute_records(state, q, spaces, args.float, args.precision)
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def cmd_table(args) -> int:
    """The quasi-circular hydrogen entries: D = 3, Z = 1, q = 2, n <= 3."""
    records = []
    for n in range(1, 4):
        for l in range(n):
            for m in range(l + 1):
                state = HydrogenicState(3, n, (l, m), 1)
                breakdown = (
                    entropy.position_entropy(state, 2)
                    if args.which == "position"
                    else entropy.momentum_entropy(state, 2)
                )
                total = breakdown.total
                records.append(
                    {
                        "n": n,
                        "l": l,
                        "m": m,
                        "w": total.w.render(),
                        "entropy_exact": total.exact_str(),
                        "entropy": total.value_at(args.precision),
                    }
                )
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args) -> int:
    qset = [int(q) for q in args.qset.split(",") if q]
    failures: list[dict] = []
    reports: list[dict] = []
    verdict_count = 0
    state_count = 0
    for D in range(2, args.dmax + 1):
        for state in enumerate_states(D, args.nmax):
            state_count += 1
            for q in qset:
                verdict = oracle.verify_state(state, q)
                verdict_count += 1
                if args.full:
                    reports.append(verdict.to_dict())
                if not verdict.all_equal:
                    failures.append(verdict.to_dict())
    summary = {
        "dmax": args.dmax,
        "nmax": args.nmax,
        "qset": qset,
        "states": state_count,
        "verdicts": verdict_count,
        "failures": len(failures),
        "all_equal": not failures,
    }
    output: dict = {"summary": summary}
    if failures:
        output["failing"] = failures
    if args.full:
        output["reports"] = reports
    json.dump(output, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if not failures else EXIT_VERIFY_FAILED


def cmd_sum(args) -> int:
    state = _parse_state(args.state)
    q = _parse_q(args.q)
    try:
        p = entropy.conjugate_order(q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = entropy.uncertainty_sum(state, q)
    record = {
        "state": state.literal(),
        "q": str(q),
        "p": str(p),
        "sum": result.total,
        "bound": result.bound,
        "margin": result.total - result.bound,
        "satisfied": result.satisfied,
    }
    json.dump(record, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hydrenyi",
        description="Exact Renyi entropies of D-dimensional hydrogenic states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="entropies of one state")
    compute.add_argument("state", help='state literal, e.g. "D=3,n=1,mu=0,0,Z=1"')
    compute.add_argument("--q", default="2", help="entropy order (integer, or real with --float)")
    compute.add_argument(
        "--space", choices=["position", "momentum", "both"], default="both"
    )
    compute.add_argument(
        "--float", action="store_true", help="use the floating quadrature oracle"
    )
    compute.add_argument("--format", choices=["json", "csv"], default="json")
    compute.add_argument(
        "--precision", type=int, default=DEFAULT_PRECISION_BITS,
        help="working precision in bits for float rendering",
    )
    compute.set_defaults(func=cmd_compute)

    table = sub.add_parser("table", help="quasi-circular hydrogen entries at q=2")
    table.add_argument("which", choices=["position", "momentum"])
    table.add_argument("--format", choices=["json", "csv"], default="json")
    table.add_argument("--precision", type=int, default=DEFAULT_PRECISION_BITS)
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="closed form vs oracle sweep")
    verify.add_argument("--dmax", type=int, default=5)
    verify.add_argument("--nmax", type=int, default=4)
    verify.add_argument("--qset", default="2,3", help="comma-separated integer orders")
    verify.add_argument("--full", action="store_true", help="include every report")
    verify.set_defaults(func=cmd_verify)

    total = sub.add_parser("sum", help="position-momentum uncertainty sum")
    total.add_argument("state")
    total.add_argument("--q", default="2", help="position-side order (> 1/2)")
    total.set_defaults(func=cmd_sum)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except TermBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ValidationError, HypergeometricSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
