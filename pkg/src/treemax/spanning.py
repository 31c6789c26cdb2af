"""Exact spanning-tree counts: Matrix-Tree (integer and weighted), a brute-force
oracle, and the generalized-join product formula."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .graph import Graph, GraphError, is_connected
from .linalg import bareiss_det, fraction_det

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class WeightedGraph:
    """Multigraph on 0..n-1 with strictly positive rational edge weights."""

    n: int
    edges: tuple[tuple[int, int, Fraction], ...] = ()

    def __post_init__(self):
        clean = []
        for u, v, w in self.edges:
            u, v, w = int(u), int(v), Fraction(w)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {(u, v)} out of range for n={self.n}")
            if w <= 0:
                raise GraphError(f"edge {(u, v)} has non-positive weight {w}")
            clean.append((u, v, w))
        object.__setattr__(self, "edges", tuple(clean))

    @classmethod
    def from_graph(cls, g: Graph, weight: Weight = 1) -> "WeightedGraph":
        return cls(g.n, tuple((u, v, Fraction(weight)) for u, v in g.sorted_edges()))

    def incident(self, v: int) -> list[int]:
        """Indices of edges touching v."""
        return [i for i, (a, b, _) in enumerate(self.edges) if v in (a, b)]


def laplacian(wg: WeightedGraph) -> list[list[Fraction]]:
    L = [[Fraction(0)] * wg.n for _ in range(wg.n)]
    for u, v, w in wg.edges:
        L[u][u] += w
        L[v][v] += w
        L[u][v] -= w
        L[v][u] -= w
    return L


def integer_laplacian(g: Graph) -> list[list[int]]:
    L = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] = L[v][u] = -1
    return L


def tau(g: Graph) -> int:
    """Number of spanning trees: the last-row/column cofactor of the Laplacian."""
    if g.n <= 1:
        return 1
    L = integer_laplacian(g)
    return bareiss_det([row[:-1] for row in L[:-1]])


def tau_weighted(wg: WeightedGraph) -> Fraction:
    """Sum over spanning trees of the product of edge weights."""
    if wg.n <= 1:
        return Fraction(1)
    L = laplacian(wg)
    return fraction_det([row[:-1] for row in L[:-1]])


def tau_oracle(g: Graph) -> int:
    """Count spanning trees by testing every (n-1)-edge subset for acyclicity.

    Deliberately shares nothing with the determinant path.
    """
    if g.n <= 1:
        return 1
    count = 0
    for subset in combinations(sorted(g.edges), g.n - 1):
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            # n-1 edges with no cycle on n vertices form a spanning tree
            count += 1
    return count


def contract(g: Graph | WeightedGraph, e: Sequence[int]) -> WeightedGraph:
    """G/e keeping parallel edges and dropping the loop left by e itself."""
    wg = g if isinstance(g, WeightedGraph) else WeightedGraph.from_graph(g)
    a, b = sorted(e[:2])
    if not any({u, v} == {a, b} for u, v, _ in wg.edges):
        raise GraphError(f"edge {(a, b)} not present")

    def image(x: int) -> int:
        x = a if x == b else x
        return x - 1 if x > b else x

    dropped = False
    out = []
    for u, v, w in wg.edges:
        if not dropped and {u, v} == {a, b}:
            dropped = True
            continue
        iu, iv = image(u), image(v)
        if iu != iv:
            out.append((iu, iv, w))
    return WeightedGraph(wg.n - 1, tuple(out))


def delete_weighted_edge(wg: WeightedGraph, index: int) -> WeightedGraph:
    return WeightedGraph(wg.n, wg.edges[:index] + wg.edges[index + 1:])


def eigen_shift_product(h: Graph, c: Weight) -> Fraction:
    """prod_{k=1}^{|H|-1} (mu_k(H) + c) over the nonzero-indexed Laplacian spectrum.

    Computed as det(L_H + cI) / c, since L_H always has eigenvalue 0.
    """
    c = Fraction(c)
    if c <= 0:
        raise ValueError("shift c must be positive")
    if h.n == 0:
        raise GraphError("empty part")
    M = [[Fraction(x) for x in row] for row in integer_laplacian(h)]
    for i in range(h.n):
        M[i][i] += c
    return fraction_det(M) / c


def tau_generalized_join(base: Graph, parts: Sequence[Graph]) -> Fraction:
    """tau(base[H_1, ..., H_n]) from the spectra of the parts and a weighted tree sum on base."""
    if len(parts) != base.n:
        raise GraphError(f"{len(parts)} parts for a base graph on {base.n} vertices")
    if not is_connected(base):
        raise GraphError("base graph must be connected")
    if base.n == 1:
        return Fraction(tau(parts[0]))
    sizes = [h.n for h in parts]
    result = Fraction(1)
    for i, h in enumerate(parts):
        c = sum(sizes[j] for j in base.adj[i])
        result *= eigen_shift_product(h, c) / sizes[i]
    weighted = WeightedGraph(base.n, tuple(
        (i, j, Fraction(sizes[i] * sizes[j])) for i, j in base.sorted_edges()))
    return result * tau_weighted(weighted)


def as_integer(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator
