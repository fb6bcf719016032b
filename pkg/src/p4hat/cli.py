"""Command-line entry point.

Thin adapters over the library: every subcommand reproduces a direct
library call on the same inputs.  Graphs travel as graph6, one per line,
on standard input and output, so commands compose in pipelines.  JSON
and CSV reports go to --out files, or to standard output when --out is
omitted.

Exit codes: 0 success or all-free, 1 lemma failure or pattern found,
2 usage or parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from .berge import (
    HypergraphFormatError,
    contains_berge_k3,
    format_hypergraph,
    lift,
    max_berge_k3_free,
    parse_hypergraph,
)
from .constructions import extremal_construction, two_k4_shared_vertex
from .detect import contains_k4, find_p4hat
from .errors import ResourceBudgetError, ScaleError
from .graphs import Graph6Error, from_graph6, to_graph6, triangle_count
from .search import (
    ForbiddenSet,
    ex_augment,
    ex_branch_bound,
    ex_naive,
    f_row,
)
from .verify import reports_to_json, run_suite

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_lines(path: str | None) -> list[str]:
    if path is None:
        text = sys.stdin.read()
    else:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    return [line for line in text.splitlines() if line.strip()]


def _read_text(path: str | None) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def _parse_graphs(path: str | None) -> list:
    graphs = []
    for i, line in enumerate(_read_lines(path), start=1):
        try:
            graphs.append(from_graph6(line))
        except Graph6Error as exc:
            raise UsageError(f"line {i}: {exc}") from exc
    return graphs


def _forbidden(text: str) -> ForbiddenSet:
    try:
        return ForbiddenSet.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


class UsageError(Exception):
    pass


def _cmd_construct(args) -> int:
    if args.variant is None and args.n is None:
        raise UsageError("construct needs --n or --variant")
    if args.variant == "two-k4":
        if args.n is not None and args.n != 7:
            raise UsageError("the two-k4 variant has exactly 7 vertices")
        g = two_k4_shared_vertex()
    else:
        try:
            g = extremal_construction(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    sys.stdout.write(to_graph6(g) + "\n")
    return EXIT_OK


def _cmd_count(args) -> int:
    for g in _parse_graphs(args.infile):
        sys.stdout.write(f"{triangle_count(g)}\n")
    return EXIT_OK


def _cmd_check(args) -> int:
    fs = _forbidden(args.forbid)
    found = False
    for g in _parse_graphs(args.infile):
        w = find_p4hat(g)
        if w is not None:
            verdict = "CONTAINS p4hat " + " ".join(map(str, w.vertices))
        elif fs.k4 and (quad := contains_k4(g)) is not None:
            verdict = "CONTAINS k4 " + " ".join(map(str, quad))
        else:
            verdict = "FREE"
        found = found or verdict != "FREE"
        sys.stdout.write(verdict + "\n")
    return EXIT_FOUND if found else EXIT_OK


def _cmd_berge(args) -> int:
    if args.max_free is not None:
        value, h = max_berge_k3_free(args.max_free)
        floor = args.max_free**2 // 8
        lines = [
            f"n {args.max_free}",
            f"max_berge_k3_free {value}",
            f"floor_n2_8 {floor}",
            f"equals_floor {'true' if value == floor else 'false'}",
            "witness:",
            format_hypergraph(h).rstrip("\n"),
        ]
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    if args.lift:
        blocks = [format_hypergraph(lift(g)) for g in _parse_graphs(args.infile)]
        _emit("".join(blocks), args.out)
        return EXIT_OK
    h = parse_hypergraph(_read_text(args.infile))
    w = contains_berge_k3(h)
    if w is None:
        _emit("BERGE-K3-FREE\n", args.out)
        return EXIT_OK
    _emit("CONTAINS berge-k3 " + " ".join(map(str, w.core)) + "\n", args.out)
    return EXIT_FOUND


def _cmd_search(args) -> int:
    fs = _forbidden(args.forbid)
    if args.method == "naive":
        rep = ex_naive(args.n, fs)
    elif args.method == "augment":
        rep = ex_augment(args.n, fs, threads=args.threads)
    else:
        rep = ex_branch_bound(
            args.n,
            fs,
            threads=args.threads,
            timeout_secs=args.timeout_secs,
            incumbent=args.incumbent,
        )
    _emit(rep.to_json(), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = run_suite(args.max_n, threads=args.threads)
    _emit(reports_to_json(reports), args.out)
    failed = any(r.failures for r in reports)
    return EXIT_FOUND if failed else EXIT_OK


def _cmd_table(args) -> int:
    if args.start < 1:
        raise UsageError("--from must be at least 1")
    fs = _forbidden(args.forbid)
    rows = [
        f_row(n, fs, threads=args.threads)
        for n in range(args.start, args.stop + 1)
    ]
    buf = []
    writer = csv.writer(
        _ListWriter(buf), lineterminator="\n", quoting=csv.QUOTE_MINIMAL
    )
    writer.writerow(["n", "ex", "floor", "f", "method", "exact"])
    for r in rows:
        writer.writerow(
            [r.n, r.ex, r.floor, r.f, r.method, "true" if r.exact else "false"]
        )
    _emit("".join(buf), args.out)
    return EXIT_OK


class _ListWriter:
    def __init__(self, buf: list):
        self.buf = buf

    def write(self, chunk: str) -> None:
        self.buf.append(chunk)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p4hat",
        description="Triangle maxima in graphs avoiding the suspension of P4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_threads = os.cpu_count() or 1

    p = sub.add_parser("construct", help="emit an extremal construction")
    p.add_argument("--n", type=int, help="number of vertices (at least 4)")
    p.add_argument(
        "--variant",
        choices=["two-k4"],
        help="named construction instead of the bipartite family",
    )
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("count", help="triangle counts for graph6 input")
    p.add_argument("--in", dest="infile", help="graph6 file, default stdin")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("check", help="test graphs for forbidden patterns")
    p.add_argument("--in", dest="infile", help="graph6 file, default stdin")
    p.add_argument(
        "--forbid", default="p4hat", help="p4hat or p4hat,k4 (default p4hat)"
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("berge", help="triangle hypergraph operations")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--lift", action="store_true", help="emit T(G) for graph6 input"
    )
    mode.add_argument(
        "--check",
        action="store_true",
        help="test a hypergraph file for a Berge triangle",
    )
    mode.add_argument(
        "--max-free",
        type=int,
        metavar="N",
        help="largest Berge-triangle-free hypergraph on N vertices",
    )
    p.add_argument("--in", dest="infile", help="input file, default stdin")
    p.add_argument("--out", help="output file, default stdout")
    p.set_defaults(func=_cmd_berge)

    p = sub.add_parser("search", help="exact maximum triangle count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--forbid", default="p4hat", help="p4hat or p4hat,k4 (default p4hat)"
    )
    p.add_argument(
        "--method",
        choices=["naive", "augment", "bnb"],
        default="augment",
    )
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument(
        "--timeout-secs",
        type=float,
        default=None,
        help="bnb only: report best-so-far with exact=false past this",
    )
    p.add_argument(
        "--incumbent",
        type=int,
        default=None,
        help="bnb only: extra lower bound for pruning",
    )
    p.add_argument("--out", help="JSON report file, default stdout")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run the lemma suite")
    p.add_argument("--suite", choices=["paper"], required=True)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--report", choices=["json"], default="json")
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--out", help="JSON report file, default stdout")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="f(n) table over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument(
        "--forbid", default="p4hat", help="p4hat or p4hat,k4 (default p4hat)"
    )
    p.add_argument("--threads", type=int, default=default_threads)
    p.add_argument("--out", help="CSV file, default stdout")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"p4hat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, HypergraphFormatError) as exc:
        print(f"p4hat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"p4hat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ScaleError, ResourceBudgetError) as exc:
        print(f"p4hat: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
