"""Command-line front end: enumerate, classify, verify, cayley.

stdout carries machine-readable output (JSON, CSV, DOT, or bare member
listings); diagnostics and progress go to stderr.  Exit codes: 0 on full
success, 1 when a verification or partition check fails, 2 on usage
errors (including enumerations refused by the size cap).  For fixed flags
and seed the output is byte-identical across runs, except for the elapsed
times inside verification reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .chain import RUN_LENGTH, TUPLE, format_endo
from .simplex import DEFAULT_ENUM_CAP, Simplex, SizeCapError
from .typemap import partition
from .verify import MAX_SWEEP_N, SUITE_NAMES, run_suite


def _vertices(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"vertices must be comma-separated integers, got {text!r}"
        ) from None
    return values


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _add_simplex_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=_positive, required=True, help="chain length")
    parser.add_argument(
        "--vertices",
        type=_vertices,
        required=True,
        help="comma-separated vertex list, e.g. 0,2,3",
    )
    parser.add_argument(
        "--cap",
        type=_positive,
        default=DEFAULT_ENUM_CAP,
        help="refuse enumerations above this many members",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="endosimplex",
        description="simplices in the endomorphism semiring of a finite chain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list the members of a simplex")
    _add_simplex_args(p_enum)
    p_enum.add_argument(
        "--format",
        choices=("json", "tuple", "runlength"),
        default="runlength",
        help="member notation (default runlength)",
    )
    p_enum.add_argument(
        "--count-only",
        action="store_true",
        help="print only the member count",
    )
    p_enum.set_defaults(func=cmd_enumerate)

    p_classify = sub.add_parser(
        "classify", help="partition a simplex into behaviour blocks"
    )
    _add_simplex_args(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_verify = sub.add_parser("verify", help="run a suite of structural checks")
    p_verify.add_argument(
        "--suite",
        choices=SUITE_NAMES,
        default="all",
        help="which claim suite to run (default all)",
    )
    p_verify.add_argument(
        "--max-n",
        type=_positive,
        default=None,
        help=f"cap the sweep at this chain length (at most {MAX_SWEEP_N})",
    )
    p_verify.add_argument(
        "--seed", type=int, default=0, help="seed for randomized subsets"
    )
    p_verify.add_argument(
        "--cap",
        type=_positive,
        default=DEFAULT_ENUM_CAP,
        help="refuse enumerations above this many members",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_cayley = sub.add_parser("cayley", help="emit an operation table")
    _add_simplex_args(p_cayley)
    p_cayley.add_argument(
        "--op", choices=("add", "mul"), required=True, help="which operation to tabulate"
    )
    p_cayley.add_argument(
        "--format", choices=("csv", "dot"), default="csv", help="output format"
    )
    p_cayley.set_defaults(func=cmd_cayley)

    return parser


def cmd_enumerate(args: argparse.Namespace) -> int:
    s = Simplex(args.n, args.vertices)
    if args.count_only:
        print(s.size())
        return 0
    members = s.elements(cap=args.cap)
    if args.format == "json":
        payload = members.to_json()
        payload["count"] = len(members)
        print(json.dumps(payload, indent=2))
        return 0
    header = {"n": s.n, "vertices": list(s.vertices), "count": len(members)}
    print(json.dumps(header), file=sys.stderr)
    style = RUN_LENGTH if args.format == "runlength" else TUPLE
    for e in members:
        print(format_endo(e, style))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    report = partition(Simplex(args.n, args.vertices), cap=args.cap)
    print(json.dumps(report.to_json(), indent=2))
    if not report.all_pass():
        print("partition checks failed", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    def progress(result) -> None:
        status = "PASS" if result.passed else "FAIL"
        print(
            f"{status} {result.claim_id} ({result.params}) {result.elapsed_s:.2f}s",
            file=sys.stderr,
        )

    report = run_suite(
        args.suite,
        max_n=args.max_n,
        seed=args.seed,
        cap=args.cap,
        progress=progress,
    )
    print(json.dumps(report.to_json(), indent=2))
    if not report.all_passed():
        print(
            f"{report.failed_count} of {len(report.results)} claims failed",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_cayley(args: argparse.Namespace) -> int:
    s = Simplex(args.n, args.vertices)
    members = s.elements(cap=args.cap).members
    if len(members) ** 2 > args.cap:
        raise SizeCapError(
            f"operation table would have {len(members) ** 2} cells, above the cap of {args.cap}"
        )
    labels = [format_endo(e) for e in members]
    if args.op == "add":
        combine = lambda x, y: x + y  # noqa: E731
    else:
        combine = lambda x, y: x * y  # noqa: E731
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([f"{args.op}"] + labels)
        for e, label in zip(members, labels):
            writer.writerow([label] + [format_endo(combine(e, g)) for g in members])
        return 0
    # dot: functional graph of the table, one edge x -> x op g per entry
    print(f"digraph cayley_{args.op} {{")
    for i, label in enumerate(labels):
        print(f'  n{i} [label="{label}"];')
    index = {e: i for i, e in enumerate(members)}
    for i, e in enumerate(members):
        for g, glabel in zip(members, labels):
            print(f'  n{i} -> n{index[combine(e, g)]} [label="{glabel}"];')
    print("}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
