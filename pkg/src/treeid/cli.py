"""Command-line entry point: ``treeid <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from .codes import certify
from .constructive import (
    FAMILY_KINDS,
    FamilySpec,
    construct_domination_bound_code,
    construct_main_bound_code,
    generate,
)
from .enumeration import free_trees, write_graph6
from .errors import BudgetExceeded, TreeIdError
from .graph import Graph, read_graph, to_dot, to_edge_list, to_graph6
from .solvers import DEFAULT_NODE_BUDGET, min_dominating_set_exact, min_dominating_set_tree, min_identifying_code
from .verify import verify_domination_theorem, verify_main_theorem, write_reports

EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3
EXIT_BUDGET = 4


def _load(args) -> Graph:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file) as fh:
            text = fh.read()
    return read_graph(text, args.format)


def _emit_graph(g: Graph, fmt: str, code=None) -> str:
    if fmt == "graph6":
        out = to_graph6(g) + "\n"
        if code is not None:
            out += "# code " + " ".join(map(str, sorted(code))) + "\n"
        return out
    out = to_edge_list(g)
    if code is not None:
        out += "# code " + " ".join(map(str, sorted(code))) + "\n"
    return out


def _parse_code(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"code must be comma-separated vertex ids, got {text!r}") from None


def cmd_solve(args) -> int:
    g = _load(args)
    res = min_identifying_code(g, node_budget=args.node_budget)
    print(f"gamma_id {res.optimum}")
    print("code " + " ".join(map(str, res.witness.code)))
    print(f"nodes {res.nodes_explored}")
    if res.time_budget_exceeded:
        print("treeid: node budget exhausted; reported code is an upper bound", file=sys.stderr)
        return EXIT_BUDGET
    return 0


def cmd_dominate(args) -> int:
    g = _load(args)
    res = min_dominating_set_tree(g) if g.is_tree() else min_dominating_set_exact(g, args.node_budget)
    print(f"gamma {res.optimum}")
    print("set " + " ".join(map(str, res.witness.code)))
    return 0


def cmd_check(args) -> int:
    g = _load(args)
    cert = certify(g, args.code)
    print(json.dumps(cert.to_record(), sort_keys=True))
    return 0 if cert.valid else 1


def cmd_construct(args) -> int:
    g = _load(args)
    build = construct_main_bound_code if args.bound == "main" else construct_domination_bound_code
    cert = build(g)
    print(f"size {cert.size}")
    print("code " + " ".join(map(str, cert.code)))
    return 0


def cmd_family(args) -> int:
    g, code = generate(FamilySpec.parse(args.kind, args.params))
    sys.stdout.write(_emit_graph(g, args.format, code if args.with_code else None))
    return 0


def cmd_enumerate(args) -> int:
    trees = free_trees(args.n, args.max_degree)
    if args.format == "graph6":
        write_graph6(trees, sys.stdout)
    else:
        for i, t in enumerate(trees):
            if i:
                sys.stdout.write("\n")
            sys.stdout.write(to_edge_list(t))
    return 0


def cmd_verify(args) -> int:
    run = verify_main_theorem if args.theorem == "main" else verify_domination_theorem
    summary, reports = run(args.n_min, args.n_max, args.workers, args.node_budget)
    if args.out:
        with open(args.out, "w") as fh:
            write_reports(reports, fh)
    print(json.dumps(summary.to_record(), sort_keys=True, indent=2))
    return 0 if summary.success else EXIT_VERIFY_FAILED


def cmd_export_dot(args) -> int:
    g = _load(args)
    code = args.code
    if args.solve:
        code = list(min_identifying_code(g, node_budget=args.node_budget).witness.code)
    sys.stdout.write(to_dot(g, code or (), args.name))
    return 0


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared so the flags work before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=["edgelist", "graph6"], default=d("edgelist"), help="graph file format")
    p.add_argument("--node-budget", type=int, default=d(DEFAULT_NODE_BUDGET), help="search node limit")
    p.add_argument("--seed", type=int, default=d(None), help="seed for randomized helpers")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treeid",
        description="Identifying codes and domination in trees.",
        parents=[_global_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("solve", parents=common, help="exact identification number with a witness")
    p.add_argument("file", help="graph file, or - for stdin")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dominate", parents=common, help="domination number with a witness")
    p.add_argument("file")
    p.set_defaults(func=cmd_dominate)

    p = sub.add_parser("check", parents=common, help="certify a candidate identifying code")
    p.add_argument("file")
    p.add_argument("--code", type=_parse_code, required=True, help="comma-separated vertex ids")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=common, help="build a code meeting a tree bound")
    p.add_argument("file")
    p.add_argument("--bound", choices=["main", "domination"], required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", parents=common, help="emit a member of a named family")
    p.add_argument("kind", choices=FAMILY_KINDS)
    p.add_argument("params", nargs="*", help="integer parameters; appended_star steps as vertex:degree")
    p.add_argument("--with-code", action="store_true", help="also print the reference code")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", parents=common, help="all non-isomorphic trees of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=common, help="exhaustive bound verification")
    p.add_argument("--theorem", choices=["main", "domination"], required=True)
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write per-tree JSON lines here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", parents=common, help="Graphviz DOT with code vertices filled")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--code", type=_parse_code)
    g.add_argument("--solve", action="store_true", help="fill an optimal code")
    p.add_argument("--name", default="G")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"treeid: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TreeIdError, OSError) as exc:
        print(f"treeid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
