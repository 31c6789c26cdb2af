"""Vectorized invariants over batches of small labeled graphs.

A batch is an int64 array ``rows`` of shape (B, n): bit j of ``rows[b, i]`` is
set iff {i, j} is an edge of graph b. Everything here is exact integer
arithmetic; spanning-tree counts use fraction-free Bareiss elimination, whose
intermediates are Laplacian minors and fit comfortably in int64 for n <= 10.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

MAX_BATCH_N = 10
CHUNK = 1 << 16


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 (column-major upper triangle) order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def rows_from_masks(masks: np.ndarray, n: int) -> np.ndarray:
    rows = np.zeros((len(masks), n), dtype=np.int64)
    for k, (i, j) in enumerate(pair_list(n)):
        bit = (masks >> k) & 1
        rows[:, i] |= bit << j
        rows[:, j] |= bit << i
    return rows


def rows_from_bipartite(patterns: np.ndarray, n: int, p: int) -> np.ndarray:
    """Side A = 0..p-1, side B = p..n-1; pattern bit a*(n-p)+b joins a to p+b."""
    q = n - p
    rows = np.zeros((len(patterns), n), dtype=np.int64)
    for a in range(p):
        for b in range(q):
            bit = (patterns >> (a * q + b)) & 1
            rows[:, a] |= bit << (p + b)
            rows[:, p + b] |= bit << a
    return rows


def degrees(rows: np.ndarray) -> np.ndarray:
    return np.bitwise_count(rows).astype(np.int64)


def _reach(rows: np.ndarray, n: int, allowed: int) -> np.ndarray:
    """Vertices reachable inside ``allowed`` from its lowest vertex, as bitmasks."""
    start = (allowed & -allowed)
    reach = np.full(len(rows), start, dtype=np.int64)
    live = [v for v in range(n) if allowed >> v & 1]
    while True:
        new = reach.copy()
        for v in live:
            new |= rows[:, v] & -((reach >> v) & 1)
        new &= allowed
        if np.array_equal(new, reach):
            return reach
        reach = new


def connected(rows: np.ndarray, n: int) -> np.ndarray:
    full = (1 << n) - 1
    if n <= 1:
        return np.ones(len(rows), dtype=bool)
    return _reach(rows, n, full) == full


def vertex_connectivity(rows: np.ndarray, n: int, deg_min: np.ndarray) -> np.ndarray:
    """kappa for connected graphs: smallest separating set, capped by min degree / n-1."""
    full = (1 << n) - 1
    complete = deg_min == n - 1
    kappa = np.where(complete, n - 1, deg_min).astype(np.int64)
    unresolved = ~complete
    for k in range(1, n - 1):
        idx = np.nonzero(unresolved & (deg_min > k))[0]
        if len(idx) == 0:
            break
        sub = rows[idx]
        hit = np.zeros(len(idx), dtype=bool)
        for S in combinations(range(n), k):
            allowed = full & ~sum(1 << s for s in S)
            hit |= _reach(sub, n, allowed) != allowed
        kappa[idx[hit]] = k
        unresolved[idx[hit]] = False
    return kappa


def edge_connectivity(rows: np.ndarray, n: int, deg_min: np.ndarray) -> tuple[np.ndarray, int]:
    """kappa' for connected graphs by enumerating every cut [U, V-U] with 0 in U.

    Also returns how many (graph, cut) pairs violate the small-cut side-size
    property: a cut of at most delta-1 edges leaves at least delta+1 vertices on
    each side.
    """
    full = (1 << n) - 1
    best = deg_min.copy()
    violations = 0
    for U in range(1, full, 2):
        outside = full & ~U
        cut = np.zeros(len(rows), dtype=np.int64)
        for u in range(n):
            if U >> u & 1:
                cut += np.bitwise_count(rows[:, u] & outside)
        np.minimum(best, cut, out=best)
        size = bin(U).count("1")
        small = cut <= deg_min - 1
        violations += int(np.count_nonzero(small & ((size < deg_min + 1) | (n - size < deg_min + 1))))
    return best, violations


def spanning_tree_counts(rows: np.ndarray, n: int) -> np.ndarray:
    """Exact tau for connected graphs via Bareiss on the reduced Laplacian (no pivoting).

    The reduced Laplacian of a connected graph is positive definite, so every
    leading principal minor, hence every Bareiss pivot, is positive.
    """
    if n > MAX_BATCH_N:
        raise ValueError(f"batched determinants are only overflow-safe for n <= {MAX_BATCH_N}")
    B = len(rows)
    m = n - 1
    if m <= 0:
        return np.ones(B, dtype=np.int64)
    idx = np.arange(m)
    M = -((rows[:, :m, None] >> idx[None, None, :]) & 1)
    M[:, idx, idx] = np.bitwise_count(rows[:, :m])
    prev = np.ones(B, dtype=np.int64)
    for k in range(m - 1):
        piv = M[:, k, k].copy()
        if np.any(piv <= 0):
            raise ArithmeticError("non-positive Bareiss pivot: batch contains a disconnected graph")
        M[:, k + 1:, k + 1:] = (piv[:, None, None] * M[:, k + 1:, k + 1:]
                                - M[:, k + 1:, k, None] * M[:, k, None, k + 1:]) // prev[:, None, None]
        prev = piv
    return M[:, m - 1, m - 1].copy()


# -- per-chunk census ----------------------------------------------------------

ClassKey = tuple[str, int, int]  # (kind, connectivity, min degree)


@dataclass
class ClassAgg:
    count: int
    max_tau: int
    rows: np.ndarray  # labeled argmax graphs, one row-tuple per line

    def merge(self, other: "ClassAgg") -> "ClassAgg":
        if other.max_tau > self.max_tau:
            best = other.rows
        elif other.max_tau < self.max_tau:
            best = self.rows
        else:
            best = np.concatenate([self.rows, other.rows])
        return ClassAgg(self.count + other.count, max(self.max_tau, other.max_tau), best)


@dataclass
class ChunkResult:
    labeled: int = 0
    connected: int = 0
    cut_violations: int = 0
    classes: dict[ClassKey, ClassAgg] = field(default_factory=dict)

    def merge(self, other: "ChunkResult") -> "ChunkResult":
        classes = dict(self.classes)
        for key, agg in other.classes.items():
            classes[key] = classes[key].merge(agg) if key in classes else agg
        return ChunkResult(self.labeled + other.labeled, self.connected + other.connected,
                           self.cut_violations + other.cut_violations, classes)


@dataclass
class Invariants:
    rows: np.ndarray
    delta: np.ndarray
    kappa: np.ndarray
    kappa_edge: np.ndarray
    tau: np.ndarray
    cut_violations: int


def chunk_rows(n: int, item: tuple) -> np.ndarray:
    """Materialize the graphs of one work item ``(split, start, stop)``.

    ``split`` is None for all labeled graphs (start/stop index edge masks), or a
    side size p for bipartite patterns.
    """
    split, start, stop = item
    codes = np.arange(start, stop, dtype=np.int64)
    if split is None:
        codes = codes[np.bitwise_count(codes) >= n - 1]
        return rows_from_masks(codes, n)
    q = n - split
    codes = codes[np.bitwise_count(codes) >= n - 1]
    return rows_from_bipartite(codes, n, split) if split * q else np.zeros((0, n), np.int64)


def invariants(rows: np.ndarray, n: int) -> Invariants:
    """Filter to connected graphs, then compute delta, kappa, kappa' and tau."""
    deg = degrees(rows)
    delta = deg.min(axis=1) if n else np.zeros(len(rows), np.int64)
    keep = delta >= 1
    rows, delta = rows[keep], delta[keep]
    keep = connected(rows, n)
    rows, delta = rows[keep], delta[keep]
    kappa = vertex_connectivity(rows, n, delta)
    kappa_edge, violations = edge_connectivity(rows, n, delta)
    tau = spanning_tree_counts(rows, n)
    return Invariants(rows, delta, kappa, kappa_edge, tau, violations)


def process_item(n: int, item: tuple) -> ChunkResult:
    raw = chunk_rows(n, item)
    inv = invariants(raw, n)
    out = ChunkResult(labeled=item[2] - item[1], connected=len(inv.rows), cut_violations=inv.cut_violations)
    for kind, conn in (("vertex", inv.kappa), ("edge", inv.kappa_edge)):
        code = conn * (n + 1) + inv.delta
        for c in np.unique(code):
            sel = code == c
            taus = inv.tau[sel]
            top = int(taus.max())
            out.classes[(kind, int(c // (n + 1)), int(c % (n + 1)))] = ClassAgg(
                int(sel.sum()), top, inv.rows[sel][taus == top])
    return out


def work_items(n: int, bipartite: bool, chunk: int = CHUNK) -> list[tuple]:
    """Contiguous, jobs-independent partition of the enumeration space."""
    items = []
    if bipartite:
        for p in range(1, n // 2 + 1):
            total = 1 << (p * (n - p))
            items += [(p, s, min(s + chunk, total)) for s in range(0, total, chunk)]
    else:
        total = 1 << (n * (n - 1) // 2)
        items += [(None, s, min(s + chunk, total)) for s in range(0, total, chunk)]
    return items


def sort_rows(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]
