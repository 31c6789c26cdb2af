"""Random instance generators shared by the reduction and acceptance tests."""
import random
from fractions import Fraction
from itertools import combinations

from treemax.graph import Graph, make_graph
from treemax.reduce import (
    ReductionLedger,
    has_parallel,
    merge_parallel,
    merge_serial,
    mesh_to_star,
    serial_candidates,
)
from treemax.spanning import WeightedGraph


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_weighted_graph(rng: random.Random, n: int) -> WeightedGraph:
    """Random multigraph mixing unit edges (so unit cliques occur) with rational weights."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                w = Fraction(1) if rng.random() < 0.6 else Fraction(rng.randint(1, 9), rng.randint(1, 5))
                edges.append((i, j, w))
                if rng.random() < 0.15:
                    edges.append((j, i, Fraction(rng.randint(1, 4), rng.randint(1, 3))))
    return WeightedGraph(n, tuple(edges))


def unit_cliques(ledger: ReductionLedger, max_size: int = 4) -> list[tuple[int, ...]]:
    wg = ledger.graph
    count: dict[tuple[int, int], list[Fraction]] = {}
    for u, v, w in wg.edges:
        count.setdefault((min(u, v), max(u, v)), []).append(w)
    unit = {k for k, ws in count.items() if ws == [1]}
    out = []
    for size in range(2, max_size + 1):
        for S in combinations(range(wg.n), size):
            if all(pair in unit for pair in combinations(S, 2)):
                out.append(S)
    return out


def legal_steps(ledger: ReductionLedger):
    steps = []
    if has_parallel(ledger):
        steps.append(("parallel", None))
    steps += [("serial", v) for v in serial_candidates(ledger)]
    steps += [("star", S) for S in unit_cliques(ledger)]
    return steps


def apply_step(ledger: ReductionLedger, step) -> ReductionLedger:
    kind, arg = step
    if kind == "parallel":
        return merge_parallel(ledger)
    if kind == "serial":
        return merge_serial(ledger, arg)
    return mesh_to_star(ledger, arg)


def random_walk(rng: random.Random, ledger: ReductionLedger, max_steps: int = 8):
    """Apply up to ``max_steps`` randomly chosen legal steps; returns (ledger, steps taken)."""
    taken = 0
    for _ in range(max_steps):
        steps = legal_steps(ledger)
        if not steps:
            break
        ledger = apply_step(ledger, rng.choice(steps))
        taken += 1
    return ledger, taken
