"""Command-line front end: count, build, bound, search, verify, reduce.

Exit status: 0 on success, 1 on any validation or input error, 2 when
``verify`` reports a FAIL verdict.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import extremal as ex
from .graph import ClassSpec, GraphError
from .io import (FormatError, format_edge_list, format_fraction, parse_weighted_edge_list,
                 read_graph, to_graph6, from_graph6)
from .reduce import ReductionLedger, mesh_to_star, reduce_ledger
from .search import CensusReport, TheoremId, Verdict, census, verify_theorem
from .spanning import tau, tau_weighted

EXIT_OK, EXIT_INVALID, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _read_text(source: Optional[str]) -> str:
    if source is None or source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _key_values(pairs: Sequence[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise UsageError(f"parameter {item!r} is not key=value")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _need(params: dict, *keys: str) -> list[str]:
    missing = [k for k in keys if k not in params]
    if missing:
        raise UsageError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in keys]


# -- subcommands -----------------------------------------------------------------

def cmd_count(args) -> int:
    if args.graph6:
        g = from_graph6(args.graph6)
        print(tau(g))
        return EXIT_OK
    text = _read_text(args.input)
    if args.weighted:
        print(format_fraction(tau_weighted(parse_weighted_edge_list(text))))
    else:
        print(tau(read_graph(text)))
    return EXIT_OK


def build_family(family: str, params: dict):
    """(graph, closed-form tau) for one family and its key=value parameters."""
    if family == "clique-join":
        s, parts = _need(params, "s", "parts")
        p = ex.JoinParams(int(s), tuple(_ints(parts)))
        return ex.build_clique_join(p), ex.tau_clique_join(p)
    if family == "M":
        n1, n2, q = (int(x) for x in _need(params, "n1", "n2", "q"))
        p = ex.MParams(n1, n2, q)
        return ex.build_M(p), ex.tau_M(p)
    if family == "B":
        (a,) = _need(params, "a")
        p = ex.BParams(tuple(_ints(a)))
        return ex.build_B(p), ex.tau_B(p)
    if family == "bip-extremal":
        n, r = (int(x) for x in _need(params, "n", "r"))
        variant = params.get("variant", "a")
        p = ex.bip_extremal_params(n, r, variant)
        return ex.build_B(p), ex.tau_B(p)
    raise UsageError(f"unknown family {family!r}")


def cmd_build(args) -> int:
    g, _ = build_family(args.family, _key_values(args.params))
    text = to_graph6(g) + "\n" if args.format == "graph6" else format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def theorem_bound(tid: TheoremId, n: int, r: int, delta: Optional[int]) -> int:
    if tid in (TheoremId.CONN, TheoremId.ECONN_EQ):
        return ex.bound_conn(n, r)
    if tid is TheoremId.VCONN_MINDEG:
        if delta is None:
            raise UsageError("--delta is required for vconn-mindeg")
        return ex.bound_vconn_mindeg(n, r, delta)
    if tid is TheoremId.ECONN_MINDEG:
        if delta is None:
            raise UsageError("--delta is required for econn-mindeg")
        return ex.bound_econn_mindeg(n, r, delta)
    return ex.bound_bipartite(n, r)


def cmd_bound(args) -> int:
    tid = TheoremId(args.theorem)
    value = theorem_bound(tid, args.n, args.r, args.delta)
    if args.format == "json":
        print(json.dumps({"theorem": tid.value, "params": {"n": args.n, "r": args.r, "delta": args.delta},
                          "bound": str(value)}, sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def _emit_report(report: CensusReport, fmt: str) -> None:
    if fmt == "tsv":
        print("\t".join(CensusReport.TSV_COLUMNS))
        print(report.tsv_row())
    else:
        print(report.to_json())


def cmd_search(args) -> int:
    spec = ClassSpec(args.kind, args.n, args.r, args.delta, args.bipartite)
    _emit_report(census(spec, jobs=args.jobs, override=args.max_n_override), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_theorem(args.theorem, args.n, args.r, args.delta,
                            jobs=args.jobs, override=args.max_n_override)
    _emit_report(report, args.format)
    return EXIT_FAIL if report.verdict is Verdict.FAIL else EXIT_OK


def cmd_reduce(args) -> int:
    wg = parse_weighted_edge_list(_read_text(args.input))
    terminals = set()
    for spec in args.terminal or ():
        terminals.update(_ints(spec))
    ledger = ReductionLedger.start(wg, terminals)
    original = tau_weighted(wg)
    for spec in args.star or ():
        ledger = mesh_to_star(ledger, [ledger.index(v) for v in _ints(spec)])
    ledger = reduce_ledger(ledger)
    residue = tau_weighted(ledger.graph)
    value = ledger.multiplier * residue
    if value != original:
        raise AssertionError(f"ledger invariant broken: {value} != {original}")
    if args.format == "json":
        print(json.dumps({"steps": list(ledger.steps), "multiplier": format_fraction(ledger.multiplier),
                          "residual_tau": format_fraction(residue), "tau": format_fraction(value),
                          "residual_vertices": [str(x) for x in ledger.labels]}, sort_keys=True, indent=2))
    else:
        for step in ledger.steps:
            print(step)
        print(f"multiplier {format_fraction(ledger.multiplier)}")
        print(f"residual tau {format_fraction(residue)}")
        print(f"tau {format_fraction(value)}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="treemax", description="Exact spanning-tree counting and extremal census.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="print the number of spanning trees of a graph")
    p.add_argument("input", nargs="?", help="edge-list or graph6 file ('-' for stdin)")
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--weighted", action="store_true", help="input is a weighted edge list (u v p/q)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("build", help="write a graph from one of the extremal families")
    p.add_argument("--family", required=True, choices=["clique-join", "M", "B", "bip-extremal"])
    p.add_argument("--params", nargs="*", default=[],
                   help="key=value: clique-join s=1 parts=1,3 | M n1=3 n2=3 q=1 | "
                        "B a=1,0,3,0,1,2 | bip-extremal n=6 r=1 variant=a")
    p.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build)

    theorems = [t.value for t in TheoremId]
    p = sub.add_parser("bound", help="print a theorem's exact upper bound")
    p.add_argument("--theorem", required=True, choices=theorems)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_bound)

    for name, func in (("search", cmd_search), ("verify", cmd_verify)):
        p = sub.add_parser(name, help="exhaustive census" if name == "search"
                           else "census a theorem's class and compare with its prediction")
        if name == "search":
            p.add_argument("--kind", required=True, choices=["vertex", "edge"])
            p.add_argument("--bipartite", action="store_true")
        else:
            p.add_argument("--theorem", required=True, choices=theorems)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--delta", type=int)
        p.add_argument("--jobs", type=_positive, default=1)
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--max-n-override", action="store_true", help="allow n = 8 for non-bipartite classes")
        p.set_defaults(func=func)

    p = sub.add_parser("reduce", help="parallel/serial/mesh-star reduction with a multiplier ledger")
    p.add_argument("input", nargs="?", help="weighted edge list 'n m' then 'u v p/q' lines")
    p.add_argument("--star", action="append", help="comma-separated unit clique to replace by a star")
    p.add_argument("--terminal", action="append", help="comma-separated vertices protected from serial merges")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FormatError, GraphError, ValueError, ArithmeticError) as exc:
        print(f"treemax {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
