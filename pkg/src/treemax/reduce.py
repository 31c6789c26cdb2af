"""Electrical-network reductions with an exact multiplier ledger.

Every step returns a new ledger such that ``multiplier * tau_weighted(graph)``
is unchanged. Vertices carry their original labels through removals; star
centers introduced by the mesh-star step are labelled ``c0``, ``c1``, ...
"""
from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Optional

from .graph import Graph, GraphError
from .spanning import WeightedGraph, tau_weighted


class ReductionError(GraphError):
    pass


@dataclass(frozen=True)
class ReductionLedger:
    graph: WeightedGraph
    multiplier: Fraction = Fraction(1)
    labels: tuple[Hashable, ...] = ()
    terminals: frozenset = frozenset()
    steps: tuple[str, ...] = ()
    centers: int = 0

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.graph.n)))
        if len(self.labels) != self.graph.n:
            raise ReductionError("one label per vertex required")
        object.__setattr__(self, "multiplier", Fraction(self.multiplier))
        if self.multiplier <= 0:
            raise ReductionError("multiplier must be positive")

    @classmethod
    def start(cls, g: WeightedGraph | Graph, terminals: Iterable[int] = ()) -> "ReductionLedger":
        wg = g if isinstance(g, WeightedGraph) else WeightedGraph.from_graph(g)
        return cls(wg, terminals=frozenset(terminals))

    def index(self, label: Hashable) -> int:
        return self.labels.index(label)

    def value(self) -> Fraction:
        """multiplier * tau of the current graph: the ledger invariant."""
        return self.multiplier * tau_weighted(self.graph)


def has_parallel(ledger: ReductionLedger) -> bool:
    seen = set()
    for u, v, _ in ledger.graph.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            return True
        seen.add(key)
    return False


def merge_parallel(ledger: ReductionLedger) -> ReductionLedger:
    """Collapse every parallel bundle to one edge carrying the summed weight."""
    bundles: OrderedDict[tuple[int, int], Fraction] = OrderedDict()
    counts: dict[tuple[int, int], int] = {}
    for u, v, w in ledger.graph.edges:
        key = (min(u, v), max(u, v))
        bundles[key] = bundles.get(key, Fraction(0)) + w
        counts[key] = counts.get(key, 0) + 1
    merged = [k for k, c in counts.items() if c > 1]
    if not merged:
        return ledger
    wg = WeightedGraph(ledger.graph.n, tuple((u, v, w) for (u, v), w in bundles.items()))
    note = "parallel " + ", ".join(
        f"{ledger.labels[u]}-{ledger.labels[v]}x{counts[(u, v)]}" for u, v in merged)
    return replace(ledger, graph=wg, steps=ledger.steps + (note,))


def serial_candidates(ledger: ReductionLedger) -> list[int]:
    """Vertices (as indices) where a serial merge is currently legal."""
    out = []
    for v in range(ledger.graph.n):
        if ledger.labels[v] in ledger.terminals:
            continue
        inc = ledger.graph.incident(v)
        if len(inc) != 2:
            continue
        ends = [a if b == v else b for a, b, _ in (ledger.graph.edges[i] for i in inc)]
        if ends[0] != ends[1]:
            out.append(v)
    return out


def merge_serial(ledger: ReductionLedger, v: int) -> ReductionLedger:
    """Replace x -a- v -b- y by x -ab/(a+b)- y, removing v; multiplier grows by a + b.

    ``v`` is a vertex index into the current graph.
    """
    wg = ledger.graph
    if not 0 <= v < wg.n:
        raise ReductionError(f"no vertex {v}")
    if ledger.labels[v] in ledger.terminals:
        raise ReductionError(f"vertex {ledger.labels[v]} is a protected terminal")
    inc = wg.incident(v)
    if len(inc) != 2:
        raise ReductionError(f"vertex {ledger.labels[v]} has {len(inc)} incident edges, need 2")
    (u1, v1, a), (u2, v2, b) = (wg.edges[i] for i in inc)
    x = u1 if v1 == v else v1
    y = u2 if v2 == v else v2
    if x == y:
        raise ReductionError(f"both edges at {ledger.labels[v]} go to the same neighbor")
    keep = [e for i, e in enumerate(wg.edges) if i not in inc]
    keep.append((x, y, a * b / (a + b)))

    def shift(t: int) -> int:
        return t - 1 if t > v else t

    new = WeightedGraph(wg.n - 1, tuple((shift(p), shift(q), w) for p, q, w in keep))
    labels = ledger.labels[:v] + ledger.labels[v + 1:]
    note = f"serial at {ledger.labels[v]}: x{a + b}"
    return replace(ledger, graph=new, labels=labels, multiplier=ledger.multiplier * (a + b),
                   steps=ledger.steps + (note,))


def mesh_to_star(ledger: ReductionLedger, clique: Iterable[int]) -> ReductionLedger:
    """Replace a unit-weight clique on ``clique`` (indices) by a weight-s star on a new center.

    The clique vertices stay; only their internal edges are removed. tau of the
    new graph is s^2 times the old one, so the multiplier shrinks by 1/s^2.
    """
    S = sorted(set(clique))
    s = len(S)
    if s < 2:
        raise ReductionError("mesh-star needs at least two clique vertices")
    wg = ledger.graph
    if any(not 0 <= x < wg.n for x in S):
        raise ReductionError("clique vertex out of range")
    members = set(S)
    internal: dict[tuple[int, int], list[Fraction]] = {}
    rest = []
    for u, v, w in wg.edges:
        if u in members and v in members:
            internal.setdefault((min(u, v), max(u, v)), []).append(w)
        else:
            rest.append((u, v, w))
    for pair in combinations(S, 2):
        ws = internal.get(pair)
        if ws is None:
            raise ReductionError(f"{[ledger.labels[i] for i in S]} is not a clique: "
                                 f"missing {ledger.labels[pair[0]]}-{ledger.labels[pair[1]]}")
        if len(ws) != 1 or ws[0] != 1:
            raise ReductionError(f"internal edge {ledger.labels[pair[0]]}-{ledger.labels[pair[1]]} "
                                 f"has weights {[str(w) for w in ws]}, need a single unit edge")
    center = wg.n
    rest.extend((x, center, Fraction(s)) for x in S)
    label = f"c{ledger.centers}"
    note = f"mesh-star on {[ledger.labels[i] for i in S]} -> center {label}: x1/{s * s}"
    return replace(ledger, graph=WeightedGraph(wg.n + 1, tuple(rest)),
                   labels=ledger.labels + (label,), multiplier=ledger.multiplier / (s * s),
                   steps=ledger.steps + (note,), centers=ledger.centers + 1)


def reduce_ledger(ledger: ReductionLedger) -> ReductionLedger:
    """Alternate exhaustive parallel merging with one serial merge until neither applies."""
    while True:
        ledger = merge_parallel(ledger)
        cand = serial_candidates(ledger)
        if not cand:
            return ledger
        ledger = merge_serial(ledger, cand[0])


def reduce_to_tau(g: WeightedGraph | Graph | ReductionLedger,
                  terminals: Optional[Iterable[int]] = None) -> Fraction:
    ledger = g if isinstance(g, ReductionLedger) else ReductionLedger.start(g, terminals or ())
    return reduce_ledger(ledger).value()
