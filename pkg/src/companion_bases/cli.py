"""Command-line front end.

Subcommands: mutate, recognize, companion, dvectors, verify-type-a.  All JSON
output uses sorted keys and no extra whitespace, so repeated runs are
byte-identical.  Vertex indices are 0-based; polygon corners are 1-based.

Exit codes: 0 success, 2 malformed input, 3 bad vertex index, 4 construction
or search failure, 5 verification found a counterexample.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from .companion import (
    MutationSearchError,
    companion_basis_failure,
    companion_basis_for,
    d_vector_set,
    dumps_companion_basis,
    loads_companion_basis,
)
from .quiver import (
    ExchangeMatrix,
    dumps_exchange_matrix,
    dynkin_type_of,
    finite_type_failure,
    is_connected,
    loads_exchange_matrix,
    mutate,
)
from .root_system import DynkinType
from .type_a import (
    Triangulation,
    enumerate_triangulations,
    enumerate_strings,
    is_strong_companion_basis,
    quiver_from_triangulation,
    random_triangulation,
)

EXIT_PARSE = 2
EXIT_INDEX = 3
EXIT_SEARCH = 4
EXIT_VERIFY = 5


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text + "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")


def _load_matrix(args) -> ExchangeMatrix:
    """Matrix from --input, or the standard orientation of --type."""
    if args.type is not None and args.input is None:
        dt = DynkinType.parse(args.type)
        return ExchangeMatrix.from_arrows(dt.rank, dt.edges())
    return loads_exchange_matrix(_read(args.input))


def cmd_mutate(args) -> int:
    try:
        B = _load_matrix(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.sequence is not None:
        try:
            ks = [int(part) for part in args.sequence.split(",") if part.strip() != ""]
        except ValueError as exc:
            print(f"error: bad sequence: {exc}", file=sys.stderr)
            return EXIT_PARSE
    else:
        ks = [args.k]
        if args.k is None:
            print("error: --k or --sequence is required", file=sys.stderr)
            return EXIT_PARSE
    try:
        for k in ks:
            B = mutate(B, k)
    except IndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INDEX
    _write(args.output, dumps_exchange_matrix(B))
    return 0


def cmd_recognize(args) -> int:
    try:
        B = _load_matrix(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    failure = finite_type_failure(B)
    report: dict = {"finite_type": failure is None}
    if failure is not None:
        report["failing_condition"] = failure
    elif is_connected(B):
        report["dynkin_type"] = str(dynkin_type_of(B))
    else:
        report["dynkin_type"] = None
    _write(args.output, json.dumps(report, sort_keys=True, separators=(",", ":")))
    return 0


def cmd_companion(args) -> int:
    try:
        B = _load_matrix(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        psi = companion_basis_for(B)
    except (ValueError, MutationSearchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    _write(args.output, dumps_companion_basis(psi, B))
    return 0


def cmd_dvectors(args) -> int:
    try:
        psi, B = loads_companion_basis(_read(args.input))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    failure = companion_basis_failure(psi, B)
    if failure is not None:
        print(f"error: {failure}", file=sys.stderr)
        return EXIT_SEARCH
    dset = d_vector_set(psi)
    rows = sorted(
        ({"d": list(d), "root": list(dset.root_of(d))} for d in dset.vectors),
        key=lambda row: row["d"],
    )
    report = {"type": str(psi.rs.dynkin), "count": len(rows), "vectors": rows}
    _write(args.output, json.dumps(report, sort_keys=True, separators=(",", ":")))
    return 0


def _verify_one(T: Triangulation) -> dict:
    B = quiver_from_triangulation(T)
    psi = companion_basis_for(B)
    return {
        "diagonals": [list(d) for d in T.diagonals],
        "quiver": {"n": B.n, "b": [list(row) for row in B.entries]},
        "strong": is_strong_companion_basis(psi, B),
        "n_strings": len(enumerate_strings(B)),
    }


def cmd_verify_type_a(args) -> int:
    n = args.n
    if n is None or n < 1:
        print("error: --n must be a positive integer", file=sys.stderr)
        return EXIT_PARSE
    if args.mode == "exhaustive":
        if n > 6:
            print("error: exhaustive mode is capped at n=6", file=sys.stderr)
            return EXIT_PARSE
        triangulations = enumerate_triangulations(n)
    else:
        rng = random.Random(args.seed)
        count = args.walk_length if args.walk_length is not None else 50
        triangulations = [random_triangulation(n, rng) for _ in range(count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_verify_one, triangulations))
    else:
        records = [_verify_one(T) for T in triangulations]
    records.sort(key=lambda r: r["diagonals"])
    lines = [json.dumps(r, sort_keys=True, separators=(",", ":")) for r in records]
    summary = {
        "mode": args.mode,
        "n": n,
        "seed": args.seed,
        "total": len(records),
        "strong": sum(1 for r in records if r["strong"]),
    }
    lines.append(json.dumps(summary, sort_keys=True, separators=(",", ":")))
    _write(args.output, "\n".join(lines))
    if args.verbose:
        print(f"{summary['strong']}/{summary['total']} strong", file=sys.stderr)
    return 0 if summary["strong"] == summary["total"] else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="companion-bases",
        description="Companion bases for quivers of cluster-tilted algebras.",
    )
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_args(p):
        p.add_argument("--input", default=None, help="input file ('-' for stdin)")
        p.add_argument("--output", default=None, help="output file ('-' for stdout)")

    def type_arg(p):
        p.add_argument(
            "--type",
            default=None,
            help="use the standard orientation of this Dynkin type as input",
        )

    p = sub.add_parser("mutate", help="mutate an exchange matrix")
    io_args(p)
    type_arg(p)
    p.add_argument("--k", type=int, default=None, help="vertex to mutate (0-based)")
    p.add_argument("--sequence", default=None, help="comma-separated vertices")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("recognize", help="finite-type recognition and Dynkin type")
    io_args(p)
    type_arg(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("companion", help="construct a companion basis")
    io_args(p)
    type_arg(p)
    p.set_defaults(func=cmd_companion)

    p = sub.add_parser("dvectors", help="d-vectors of all positive roots")
    io_args(p)
    p.set_defaults(func=cmd_dvectors)

    p = sub.add_parser(
        "verify-type-a", help="check d-vectors against string modules in type A"
    )
    io_args(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument(
        "--walk-length",
        type=int,
        default=None,
        dest="walk_length",
        help="number of sampled triangulations in sample mode",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_type_a)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
