"""Command-line interface: ``dptree {check,construct,verify,oracle,gen}``.

Exit codes: 0 success, 1 negative answer, 2 input error, 3 theorem/oracle
disagreement (``oracle`` only).
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import GraphFormatError, GraphValidationError, WeightedGraph, read_graph, serialize_graph
from .oracle import DEFAULT_CAP, EnumerationCapError, GenSpec, brute_force_common_dp_tree, count_common_dp_trees, random_connected_graph
from .theorem import ConditionReport, check_conditions, construct_common_dp_tree
from .trees import InvalidTreeError, parse_tree, serialize_tree, verify_dp_tree
from .weights import format_weight

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_DISAGREE = 3


class InputError(Exception):
    pass


def _load_graph(path: str) -> WeightedGraph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read graph {path}: {exc.strerror or exc}") from None
    except (GraphFormatError, GraphValidationError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _check_vertices(g: WeightedGraph, **ids: int) -> None:
    for name, x in ids.items():
        if not 0 <= x < g.n:
            raise InputError(f"-{name} {x} is not a vertex of the graph (0..{g.n - 1})")
    if "u" in ids and "v" in ids and ids["u"] == ids["v"]:
        raise InputError("u and v must be distinct")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def report_to_json(g: WeightedGraph, report: ConditionReport) -> dict:
    """Structured report. Distances are exact integers in 10**-9 units."""
    doc: dict = {
        "u": report.u,
        "v": report.v,
        "overall": report.overall,
        "failed_condition": report.failed_condition,
        "conditions": {"1": report.cond1, "2": report.cond2, "3": report.cond3},
        "scale": 10**9,
        "edges": [[a, b, w] for a, b, w in g.edges],
        "path": None,
        "partition": None,
        "tie": None,
        "violation": None,
    }
    if report.path is not None:
        doc["path"] = {"vertices": list(report.path.vertices), "prefix": list(report.path.prefix)}
    if report.partition is not None:
        part = report.partition
        doc["partition"] = {
            "block_of": list(part.block_of),
            "blocks": [sorted(b) for b in part.blocks],
            "anchor_dist": list(part.anchor_dist),
        }
    if report.tie is not None:
        t = report.tie
        doc["tie"] = {"vertex": t.vertex, "anchors": list(t.anchors), "distance": t.distance}
    if report.violation is not None:
        e = report.violation
        doc["violation"] = {
            "x": e.x,
            "y": e.y,
            "weight": e.weight,
            "block_x": e.block_x,
            "block_y": e.block_y,
            "gap": e.gap,
            "imbalance": e.imbalance,
            "clause": e.clause,
        }
    return doc


def format_report(report: ConditionReport) -> str:
    f = format_weight
    lines = [f"u={report.u} v={report.v}"]
    if report.path is None:
        lines.append("condition (1) fails: multiple shortest paths")
    else:
        p = report.path
        lines.append(f"condition (1) holds: P=({','.join(map(str, p.vertices))}) length {f(p.length)}")
        if report.tie is not None:
            t = report.tie
            lines.append(
                f"condition (2) fails: vertex {t.vertex} is at distance {f(t.distance)} "
                f"from path positions {list(t.anchors)}"
            )
        else:
            part = report.partition
            lines.append("condition (2) holds: blocks")
            for i, block in enumerate(part.blocks):
                lines.append(f"  V_{i} (anchor {p.vertices[i]}): {sorted(block)}")
            e = report.violation
            if e is None:
                lines.append("condition (3) holds")
            elif e.clause == "WEIGHT_CLAUSE":
                lines.append(
                    f"condition (3) fails: WEIGHT_CLAUSE on edge ({e.x},{e.y}): "
                    f"w={f(e.weight)} < {f(e.gap)}"
                )
            else:
                lines.append(
                    f"condition (3) fails: BALANCE_CLAUSE on edge ({e.x},{e.y}): "
                    f"{f(e.imbalance)} > {f(e.weight)}-{f(e.gap)} = {f(e.weight - e.gap)}"
                )
    lines.append(f"common DP-tree exists: {'yes' if report.overall else 'no'}")
    return "\n".join(lines)


def cmd_check(args) -> int:
    g = _load_graph(args.graph)
    _check_vertices(g, u=args.u, v=args.v)
    report = check_conditions(g, args.u, args.v)
    if args.json:
        _emit(json.dumps(report_to_json(g, report), indent=2), args.output)
    else:
        _emit(format_report(report), args.output)
    return EXIT_OK if report.overall else EXIT_NO


def cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    _check_vertices(g, u=args.u, v=args.v)
    result = construct_common_dp_tree(g, args.u, args.v)
    if not result.found:
        print(format_report(result.report))
        return EXIT_NO
    _emit(serialize_tree(result.tree), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    _check_vertices(g, r=args.r)
    try:
        with open(args.tree, encoding="utf-8") as fh:
            t = parse_tree(fh.read(), g)
    except OSError as exc:
        raise InputError(f"cannot read tree {args.tree}: {exc.strerror or exc}") from None
    except (GraphFormatError, InvalidTreeError) as exc:
        raise InputError(f"{args.tree}: {exc}") from None
    bad = verify_dp_tree(g, t, args.r)
    if bad is None:
        print(f"tree is distance-preserving from {args.r}")
        return EXIT_OK
    print(
        f"not distance-preserving from {args.r}: vertex {bad.vertex} has "
        f"d_T={format_weight(bad.tree_dist)} but d_G={format_weight(bad.graph_dist)}"
    )
    return EXIT_NO


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    _check_vertices(g, u=args.u, v=args.v)
    theorem = check_conditions(g, args.u, args.v).overall
    try:
        first = brute_force_common_dp_tree(g, args.u, args.v, args.cap)
        count = count_common_dp_trees(g, args.u, args.v, args.cap) if first is not None else 0
    except EnumerationCapError as exc:
        raise InputError(str(exc)) from None
    oracle = first is not None
    verdict = "AGREE" if oracle == theorem else "DISAGREE"
    found = f"yes (count {count})" if oracle else "no"
    print(f"theorem: {'yes' if theorem else 'no'}, oracle: {found}, {verdict}")
    if first is not None:
        print(serialize_tree(first))
    return EXIT_OK if oracle == theorem else EXIT_DISAGREE


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.n, args.m, args.max_weight, args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(serialize_graph(random_connected_graph(spec)), args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _vertex(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"vertex id must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dptree", description="Common distance-preserving spanning trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_arg(p):
        p.add_argument("-g", "--graph", required=True, metavar="PATH")

    def pair_args(p):
        p.add_argument("-u", type=_vertex, required=True, metavar="N")
        p.add_argument("-v", type=_vertex, required=True, metavar="N")

    p = sub.add_parser("check", help="test the three conditions")
    graph_arg(p)
    pair_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a common DP-tree")
    graph_arg(p)
    pair_args(p)
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a tree is distance-preserving from a root")
    graph_arg(p)
    p.add_argument("-t", "--tree", required=True, metavar="PATH")
    p.add_argument("-r", type=_vertex, required=True, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare the conditions with exhaustive search")
    graph_arg(p)
    pair_args(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, metavar="N")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a random connected graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"dptree: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
