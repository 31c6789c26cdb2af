"""Simple labeled graphs, structural constructions and small-order invariants.

Vertices are the dense integers ``0..n-1``; edges are stored canonically as
``(u, v)`` with ``u < v``. Graphs are immutable values.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} is not canonical for n={self.n}")

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph, deduplicating edges. Loops and out-of-range endpoints raise."""
    canon = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside [0, {n})")
        canon.add(_canon(u, v))
    return Graph(n, frozenset(canon))


# -- standard families -------------------------------------------------------

def complete(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> Graph:
    """K_{1,k} with center 0."""
    return make_graph(k + 1, [(0, i) for i in range(1, k + 1)])


# -- constructions -------------------------------------------------------------

def union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, g.edges | {(u + off, v + off) for u, v in h.edges})


def join(g: Graph, h: Graph) -> Graph:
    u = union(g, h)
    cross = {(i, g.n + j) for i in range(g.n) for j in range(h.n)}
    return Graph(u.n, u.edges | cross)


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(
        (i, j) for i in range(g.n) for j in range(i + 1, g.n) if (i, j) not in g.edges))


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"invalid edge {tuple(e)}")
    c = _canon(u, v)
    if c in g.edges:
        raise GraphError(f"edge {c} already present")
    return Graph(g.n, g.edges | {c})


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    c = _canon(*e)
    if c not in g.edges:
        raise GraphError(f"edge {c} not present")
    return Graph(g.n, g.edges - {c})


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertex set")
    return Graph(g.n, frozenset(_canon(perm[u], perm[v]) for u, v in g.edges))


def generalized_join(base: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex i of ``base`` by ``parts[i]`` and fully connect parts along base edges."""
    if len(parts) != base.n:
        raise GraphError(f"{len(parts)} parts for a base graph on {base.n} vertices")
    offsets = [0]
    for h in parts:
        offsets.append(offsets[-1] + h.n)
    edges = set()
    for i, h in enumerate(parts):
        o = offsets[i]
        edges.update((u + o, v + o) for u, v in h.edges)
    for i, j in base.edges:
        for a in range(offsets[i], offsets[i + 1]):
            for b in range(offsets[j], offsets[j + 1]):
                edges.add(_canon(a, b))
    return Graph(offsets[-1], frozenset(edges))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), frozenset(
        (index[u], index[v]) for u, v in g.edges if u in index and v in index))


# -- shifts --------------------------------------------------------------------

def partial_shift(g: Graph, v: int, x: int, w: int) -> Graph:
    """G(v -x-> w): delete vx and add wx, for x in N(v) \\ N[w]."""
    if v == w:
        raise GraphError("partial shift needs v != w")
    if x not in g.adj[v] or x == w or x in g.adj[w]:
        raise GraphError(f"vertex {x} is not in N({v}) \\ N[{w}]")
    return Graph(g.n, (g.edges - {_canon(v, x)}) | {_canon(w, x)})


def shift(g: Graph, v: int, w: int) -> Graph:
    if v == w:
        raise GraphError("shift needs v != w")
    moved = g.adj[v] - g.adj[w] - {w}
    out = g
    for x in sorted(moved):
        out = partial_shift(out, v, x, w)
    return out


def shift_hypothesis_witnesses(g: Graph) -> list[tuple[int, int, int, int]]:
    """All (v, w, v1, v2) meeting the hypotheses of the partial-shift growth lemma.

    Requires G connected, N(w) in N[v], distinct v1, v2 in N(v) \\ N[w], and a
    v1-v2 path avoiding N[w] and v.
    """
    if not is_connected(g):
        return []
    out = []
    for v in range(g.n):
        for w in range(g.n):
            if v == w or not g.adj[w] <= g.adj[v] | {v}:
                continue
            closed_w = g.adj[w] | {w}
            cand = sorted(g.adj[v] - closed_w)
            if len(cand) < 2:
                continue
            blocked = closed_w | {v}
            comp = _components_avoiding(g, blocked)
            for i, v1 in enumerate(cand):
                for v2 in cand[i + 1:]:
                    if comp[v1] == comp[v2]:
                        out.append((v, w, v1, v2))
    return out


def _components_avoiding(g: Graph, blocked: set[int] | frozenset[int]) -> dict[int, int]:
    label: dict[int, int] = {}
    for s in range(g.n):
        if s in blocked or s in label:
            continue
        label[s] = s
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in g.adj[u]:
                if x not in blocked and x not in label:
                    label[x] = s
                    queue.append(x)
    return label


# -- invariants ----------------------------------------------------------------

def min_degree(g: Graph) -> int:
    return min(g.degrees()) if g.n else 0


def components(g: Graph) -> list[list[int]]:
    label = _components_avoiding(g, frozenset())
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(label[v], []).append(v)
    return list(groups.values())


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    color: dict[int, int] = {}
    for s in range(g.n):
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for x in g.adj[u]:
                if x not in color:
                    color[x] = 1 - color[u]
                    queue.append(x)
                elif color[x] == color[u]:
                    return None
    side0 = frozenset(v for v, c in color.items() if c == 0)
    return side0, frozenset(range(g.n)) - side0


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _max_flow_unit(cap: dict[int, dict[int, int]], s: int, t: int, limit: int) -> int:
    """Edmonds-Karp on a residual dict, stopping once ``limit`` units are routed."""
    flow = 0
    while flow < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for x, c in cap[u].items():
                if c > 0 and x not in parent:
                    parent[x] = u
                    queue.append(x)
        if t not in parent:
            break
        x = t
        while x != s:
            u = parent[x]
            cap[u][x] -= 1
            cap[x][u] = cap[x].get(u, 0) + 1
            x = u
        flow += 1
    return flow


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    cap: dict[int, dict[int, int]] = {v: {} for v in range(g.n)}
    for u, v in g.edges:
        cap[u][v] = 1
        cap[v][u] = 1
    return _max_flow_unit(cap, s, t, g.n)


def edge_connectivity(g: Graph) -> int:
    """Minimum s-t cut over fixed s = 0 and every t != 0; 0 when disconnected."""
    if g.n <= 1 or not is_connected(g):
        return 0
    return min(local_edge_connectivity(g, 0, t) for t in range(1, g.n))


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Internally disjoint s-t paths for non-adjacent s, t (vertex-split network)."""
    # v_in = 2v, v_out = 2v + 1
    big = g.n
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u, v in g.edges:
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    return _max_flow_unit(cap, 2 * s + 1, 2 * t, g.n)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G); n-1 for complete graphs and 0 when disconnected."""
    if g.n <= 1 or not is_connected(g):
        return 0
    if is_complete(g):
        return g.n - 1
    best = g.n - 1
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                best = min(best, local_vertex_connectivity(g, s, t))
    return best


def edge_cut_sizes(g: Graph):
    """Yield (U, |[U, V-U]|) for every proper nonempty U containing vertex 0."""
    n = g.n
    for mask in range((1 << (n - 1)) - 1):
        side = {0} | {i + 1 for i in range(n - 1) if mask >> i & 1}
        cut = sum(1 for u, v in g.edges if (u in side) != (v in side))
        yield frozenset(side), cut


# -- isomorphism ---------------------------------------------------------------

def _refined_labels(g: Graph) -> list[tuple]:
    deg = g.degrees()
    labels = [(d,) for d in deg]
    for _ in range(2):
        labels = [(labels[v], tuple(sorted(labels[x] for x in g.adj[v]))) for v in range(g.n)]
    return labels


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Degree-refined backtracking isomorphism test, intended for n <= 10."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    lg, lh = _refined_labels(g), _refined_labels(h)
    if sorted(lg) != sorted(lh):
        return False
    by_label: dict[tuple, list[int]] = {}
    for v, lab in enumerate(lh):
        by_label.setdefault(lab, []).append(v)
    order = sorted(range(g.n), key=lambda v: (len(by_label[lg[v]]), -g.degree(v)))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for cand in by_label[lg[v]]:
            if cand in used:
                continue
            if all(g.has_edge(v, u) == h.has_edge(cand, mapping[u]) for u in mapping):
                mapping[v] = cand
                used.add(cand)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(cand)
        return False

    return extend(0)


def dedup_isomorphic(graphs: Iterable[Graph]) -> list[Graph]:
    """Keep the first graph of every isomorphism class, preserving order."""
    reps: list[Graph] = []
    for g in graphs:
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


# -- graph classes -------------------------------------------------------------

class ConnKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


@dataclass(frozen=True)
class ClassSpec:
    """Graphs of order n with connectivity r of the given kind, optional min degree."""

    kind: ConnKind
    n: int
    r: int
    delta: Optional[int] = None
    bipartite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kind", ConnKind(self.kind))
        if self.r < 1:
            raise GraphError("connectivity r must be at least 1")
        if self.delta is not None and self.delta < self.r:
            raise GraphError("minimum degree must be at least r")
        if self.n < self.r + 1:
            raise GraphError("order must be at least r + 1")

    def contains(self, g: Graph) -> bool:
        if g.n != self.n or not is_connected(g):
            return False
        if self.bipartite and not is_bipartite(g):
            return False
        if self.delta is not None and min_degree(g) != self.delta:
            return False
        conn = vertex_connectivity(g) if self.kind is ConnKind.VERTEX else edge_connectivity(g)
        return conn == self.r

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "n": self.n, "r": self.r,
                "delta": self.delta, "bipartite": self.bipartite}
