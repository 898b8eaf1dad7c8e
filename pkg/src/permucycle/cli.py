"""Command-line interface.

Exit codes: 0 success (or a valid word), 1 an invalid word, 2 bad arguments,
unsupported n, or unreadable input. Results go to stdout, diagnostics to
stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .count import (
    bounds_digits,
    enumerate_ucycles,
    lower_bound,
    read_edge_list,
    spanning_tree_count,
    upper_bound,
)
from .errors import UnsupportedN
from .generate import SEED_WORDS, iter_chunks
from .treebuild import build_tree, write_graphviz, write_records
from .verify import verify, verify_chunks
from .wordio import WordParseError, read_word, write_word

MAX_TREE_N = 10
MAX_COMPACT_N = 9
# beyond this many digits the bounds are reported as digit counts
MAX_EXACT_DIGITS = 4000


class UsageError(Exception):
    pass


def log(msg: str) -> None:
    print(msg, file=sys.stderr)


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _need_n(n: int, low: int = 3) -> None:
    if n < low:
        raise UsageError(f"--n must be >= {low}, got {n}")


def cmd_generate(args) -> int:
    _need_n(args.n)
    compact = args.compact or args.format == "compact"
    if compact and args.n > MAX_COMPACT_N:
        raise UsageError(f"compact format needs n <= {MAX_COMPACT_N}")
    with _output(args.output) as out:
        count = write_word(iter_chunks(args.n), out, compact=compact)
    log(f"n={args.n} length={count}")
    return 0


def cmd_verify(args) -> int:
    _need_n(args.n)
    if args.input is None or args.input == "-":
        report = verify_chunks(args.n, read_word(sys.stdin))
    else:
        with open(args.input) as fh:
            report = verify_chunks(args.n, read_word(fh))
    if report.valid:
        log(f"valid: n={args.n} patterns={report.patterns_seen}")
        return 0
    idx, reason = report.first_failure or (None, "incomplete")
    log(f"invalid: n={args.n} length={report.length} patterns={report.patterns_seen} "
        f"first failure at {idx}: {reason}")
    return 1


def cmd_tree(args) -> int:
    if not 5 <= args.n <= MAX_TREE_N:
        raise UsageError(f"tree export supports 5 <= n <= {MAX_TREE_N}, got {args.n}")
    tree = build_tree(args.n)
    fmt = "graphviz" if args.graphviz else args.format
    with _output(args.output) as out:
        if fmt == "graphviz":
            write_graphviz(tree, out)
        else:
            write_records(tree, out)
    log(f"n={args.n} vertices={len(tree)} edges={tree.num_edges()}")
    return 0


def _bounds_report(n: int) -> dict:
    digits = bounds_digits(n)
    report = {"n": n, "lower": None, "upper": None}
    if n >= 5 and digits["lower_digits"] <= MAX_EXACT_DIGITS:
        report["lower"] = lower_bound(n)
    if digits["upper_digits"] <= MAX_EXACT_DIGITS:
        report["upper"] = upper_bound(n)
    report.update((k, v) for k, v in digits.items() if k != "n")
    return report


def cmd_bounds(args) -> int:
    _need_n(args.n)
    print(json.dumps(_bounds_report(args.n)))
    return 0


def cmd_census(args) -> int:
    if args.n not in (3, 4):
        raise UsageError("census supports n = 3 or 4")
    count, words = enumerate_ucycles(args.n)
    verified = sum(verify(args.n, w).valid for w in words)
    report = _bounds_report(args.n)
    report.update(
        exact_count=count,
        verified=verified,
        contains_paper_word=SEED_WORDS[args.n] in words,
    )
    if args.words:
        report["words"] = words
    print(json.dumps(report))
    return 0 if verified == count else 1


def cmd_stcount(args) -> int:
    try:
        num_vertices, edges = read_edge_list(args.graph)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from None
    trees = spanning_tree_count(num_vertices, edges)
    print(json.dumps({"vertices": num_vertices, "edges": len(edges), "spanning_trees": trees}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permucycle", description="Universal cycles for permutations over {0..n}.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write the universal cycle for S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--compact", action="store_true", help="one digit per symbol (n <= 9)")
    p.add_argument("--format", choices=("spaced", "compact"), default="spaced")
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a word read from --input or stdin")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tree", help="export the linking tree for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("records", "graphviz"), default="records")
    p.add_argument("--graphviz", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("bounds", help="lower and upper bounds on the number of cycles")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("census", help="exhaustive count for n = 3, 4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--words", action="store_true", help="include the words in the report")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("stcount", help="spanning trees of an edge-list graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_stcount)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedN, WordParseError) as exc:
        log(f"error: {exc}")
        return 2
    except OSError as exc:
        log(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
