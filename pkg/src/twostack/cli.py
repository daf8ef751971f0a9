"""
Command-line front end.  Every command prints either plain text or a
stable JSON envelope {"command", "input", "result"}; counts are emitted as
decimal strings in JSON and CSV so they survive 64-bit consumers.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import permutations as iter_permutations

from . import counting, trees, verify
from .permutations import (
    contains_pattern,
    descent_count,
    format_permutation,
    is_t_stack_sortable,
    parse_permutation,
    reduce_type1,
    restore_type1,
    sorting_passes,
    stack_sort,
    statistics,
)


def _emit(args, command: str, input_obj, result_obj, text_lines) -> None:
    if args.format == "json":
        print(json.dumps({"command": command, "input": input_obj, "result": result_obj}))
    else:
        for line in text_lines:
            print(line)


def _reject_csv(args) -> None:
    if args.format == "csv":
        raise ValueError("csv output is only supported by the table command")


def _cmd_sort(args) -> int:
    _reject_csv(args)
    if args.passes < 0:
        raise ValueError("--passes must be >= 0")
    perm = parse_permutation(args.perm)
    for _ in range(args.passes):
        perm = stack_sort(perm)
    out = format_permutation(perm)
    _emit(args, "sort", {"perm": args.perm, "passes": args.passes}, out, [out])
    return 0


def _cmd_sortable(args) -> int:
    _reject_csv(args)
    perm = parse_permutation(args.perm)
    sortable = is_t_stack_sortable(perm, args.t)
    needed = sorting_passes(perm)
    _emit(
        args,
        "sortable",
        {"perm": args.perm, "t": args.t},
        {"sortable": sortable, "passes_needed": needed},
        ["yes" if sortable else "no", f"passes needed: {needed}"],
    )
    return 0


def _cmd_stats(args) -> int:
    _reject_csv(args)
    stats = statistics(parse_permutation(args.perm))
    _emit(
        args,
        "stats",
        {"perm": args.perm},
        {
            "descents": stats.descents,
            "ascents": stats.ascents,
            "runs": stats.runs,
            "rl_maxima": list(stats.rl_maxima),
            "type": stats.ptype,
        },
        [
            f"descents: {stats.descents}",
            f"ascents: {stats.ascents}",
            f"runs: {stats.runs}",
            f"rl-maxima: {format_permutation(stats.rl_maxima)}",
            f"type: {stats.ptype}",
        ],
    )
    return 0


def _cmd_pattern(args) -> int:
    _reject_csv(args)
    perm = parse_permutation(args.perm)
    patt = parse_permutation(args.q)
    found = contains_pattern(perm, patt)
    _emit(
        args,
        "pattern",
        {"perm": args.perm, "q": args.q},
        {"contains": found},
        ["yes" if found else "no"],
    )
    return 0


def _cmd_fmap(args) -> int:
    _reject_csv(args)
    marked = reduce_type1(parse_permutation(args.perm))
    out = format_permutation(marked.perm)
    _emit(
        args,
        "fmap",
        {"perm": args.perm},
        {"perm": out, "mark": marked.mark_rank},
        [f"perm: {out}", f"mark: {marked.mark_rank}"],
    )
    return 0


def _cmd_finv(args) -> int:
    _reject_csv(args)
    grown = restore_type1((parse_permutation(args.perm), args.mark))
    out = format_permutation(grown)
    _emit(args, "finv", {"perm": args.perm, "mark": args.mark}, out, [out])
    return 0


_COUNT_METHODS = {
    "w": ("formula", "brute"),
    "trees": ("formula", "enum"),
    "maps": ("formula",),
    "catalan": ("formula",),
    "total": ("formula", "brute"),
}


def _count_value(args) -> int:
    what, method = args.what, args.method
    if method not in _COUNT_METHODS[what]:
        allowed = "/".join(_COUNT_METHODS[what])
        raise ValueError(f"count {what} supports --method {allowed}, not {method!r}")
    if what == "w":
        if args.n is None or args.k is None:
            raise ValueError("count w requires --n and --k")
        if method == "brute":
            counting.w_formula(args.n, args.k)  # range check up front
            return counting.brute_force_w(args.n, args.jobs).row.get(args.k, 0)
        return counting.w_formula(args.n, args.k)
    if what == "trees":
        if args.n is None or args.k is None:
            raise ValueError("count trees requires --n and --k (trees on n+1 nodes)")
        if method == "enum":
            trees.count_trees(args.n, args.k)  # range check up front
            return sum(1 for _ in trees.enumerate_trees(args.n + 1, args.k))
        return trees.count_trees(args.n, args.k)
    if what == "maps":
        if args.f is None or args.pv is None:
            raise ValueError("count maps requires --f and --pv")
        return counting.planar_map_count(args.f, args.pv)
    if what == "catalan":
        if args.n is None:
            raise ValueError("count catalan requires --n")
        return counting.catalan(args.n)
    if args.n is None:
        raise ValueError("count total requires --n")
    if method == "brute":
        return counting.brute_force_w(args.n, args.jobs).total()
    return counting.w_total(args.n)


def _cmd_count(args) -> int:
    _reject_csv(args)
    value = _count_value(args)
    params = {
        key: getattr(args, key)
        for key in ("n", "k", "f", "pv")
        if getattr(args, key) is not None
    }
    input_obj = {"what": args.what, "method": args.method, **params}
    _emit(args, "count", input_obj, str(value), [str(value)])
    return 0


def _cmd_table(args) -> int:
    table = counting.w_table(args.n)
    if args.format == "csv":
        sys.stdout.write(table.to_csv())
    else:
        _emit(
            args,
            "table",
            {"n": args.n},
            table.to_json_dict(),
            [f"W({args.n},{k}) = {table.row[k]}" for k in sorted(table.row)],
        )
    return 0


def _cmd_enumerate(args) -> int:
    _reject_csv(args)
    if args.what == "perms":
        if args.n is None:
            raise ValueError("enumerate perms requires --n")
        if args.n < 0:
            raise ValueError("--n must be >= 0")
        if args.nodes is not None or args.leaves is not None:
            raise ValueError("--nodes/--leaves only apply to enumerate trees")
        input_obj = {"what": "perms", "n": args.n, "runs": args.runs, "filter": args.filter}
        for p in iter_permutations(range(1, args.n + 1)):
            if args.runs is not None and descent_count(p) + 1 != args.runs:
                continue
            if args.filter == "2ss" and not is_t_stack_sortable(p, 2):
                continue
            out = format_permutation(p)
            _emit(args, "enumerate", input_obj, out, [out])
    else:
        if args.nodes is None:
            raise ValueError("enumerate trees requires --nodes")
        if args.n is not None or args.runs is not None or args.filter is not None:
            raise ValueError("--n/--runs/--filter only apply to enumerate perms")
        input_obj = {"what": "trees", "nodes": args.nodes, "leaves": args.leaves}
        for tree in trees.enumerate_trees(args.nodes, args.leaves):
            _emit(
                args,
                "enumerate",
                input_obj,
                trees.tree_to_json(tree),
                [trees.format_tree(tree)],
            )
    return 0


def _cmd_verify(args) -> int:
    _reject_csv(args)
    report = verify.run_suite(args.suite, args.max_n, args.jobs)
    if args.format == "json":
        checks = [
            {"label": c.label, "expected": str(c.expected), "actual": str(c.actual), "ok": c.ok}
            for c in report.checks
        ]
        result = {
            "suite": report.suite,
            "max_n": report.max_n,
            "passed": report.passed,
            "checks": checks,
        }
        _emit(args, "verify", {"suite": args.suite, "max_n": report.max_n}, result, [])
    else:
        for check in report.failures:
            print(f"FAIL {check.label}: expected {check.expected}, actual {check.actual}")
        verdict = "PASS" if report.passed else f"FAIL ({len(report.failures)} mismatches)"
        print(f"suite {report.suite} (max n {report.max_n}): {verdict}, {len(report.checks)} checks")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twostack",
        description="Stack sorting, 2-stack sortable permutation counting, "
        "and the matching labeled-tree enumeration.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (csv applies to the table command)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", parents=[fmt], help="apply stack-sorting passes")
    p.add_argument("perm", help='permutation, e.g. "3 5 2 4 1"')
    p.add_argument("--passes", type=int, default=1, help="number of passes (default 1)")
    p.set_defaults(handler=_cmd_sort)

    p = sub.add_parser("sortable", parents=[fmt], help="test t-stack sortability")
    p.add_argument("perm")
    p.add_argument("--t", type=int, required=True, help="number of allowed passes")
    p.set_defaults(handler=_cmd_sortable)

    p = sub.add_parser("stats", parents=[fmt], help="descents/runs/rl-maxima/type")
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("pattern", parents=[fmt], help="pattern containment test")
    p.add_argument("perm")
    p.add_argument("--q", required=True, help='pattern, e.g. "2 3 1"')
    p.set_defaults(handler=_cmd_pattern)

    p = sub.add_parser(
        "fmap", parents=[fmt],
        help="shrink a type-1 permutation to a marked (n-1)-permutation",
    )
    p.add_argument("perm")
    p.set_defaults(handler=_cmd_fmap)

    p = sub.add_parser("finv", parents=[fmt], help="inverse of fmap")
    p.add_argument("perm")
    p.add_argument("--mark", type=int, required=True, help="rank of the marked rl maximum")
    p.set_defaults(handler=_cmd_finv)

    p = sub.add_parser("count", parents=[fmt], help="exact counts")
    p.add_argument("what", choices=("w", "trees", "maps", "catalan", "total"))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--f", type=int, help="faces parameter for maps")
    p.add_argument("--pv", type=int, help="vertices parameter for maps")
    p.add_argument("--method", choices=("formula", "brute", "enum"), default="formula")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for brute force")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("table", parents=[fmt], help="full W(n, 1..n) row")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser(
        "enumerate", parents=[fmt],
        help="stream permutations or trees, one per line, in canonical order",
    )
    p.add_argument("what", choices=("perms", "trees"))
    p.add_argument("--n", type=int, help="permutation length")
    p.add_argument("--runs", type=int, help="keep only permutations with this many runs")
    p.add_argument("--filter", choices=("2ss",), help="keep only 2-stack sortable permutations")
    p.add_argument("--nodes", type=int, help="tree node count")
    p.add_argument("--leaves", type=int, help="keep only trees with this many leaves")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    p.add_argument("--suite", required=True, choices=verify.SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=None, help="override the suite's bound")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
