"""Text formats: plain edge lists, weighted edge lists with rational weights, graph6."""
from __future__ import annotations

from fractions import Fraction

from .graph import Graph, GraphError, make_graph
from .spanning import WeightedGraph


class FormatError(ValueError):
    pass


def _data_lines(text: str) -> list[list[str]]:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _header(rows: list[list[str]]) -> tuple[int, int]:
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge list must start with a 'n m' header line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
    except ValueError as exc:
        raise FormatError(f"bad header {' '.join(rows[0])!r}") from exc
    if n < 0 or m < 0:
        raise FormatError("negative counts in header")
    if len(rows) - 1 != m:
        raise FormatError(f"header announces {m} edges, found {len(rows) - 1}")
    return n, m


def parse_edge_list(text: str) -> Graph:
    rows = _data_lines(text)
    n, _ = _header(rows)
    seen = set()
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise FormatError(f"edge line needs two endpoints: {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError as exc:
            raise FormatError(f"non-integer endpoint in {' '.join(row)!r}") from exc
        key = (min(u, v), max(u, v))
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        if key in seen:
            raise FormatError(f"duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_weighted_edge_list(text: str) -> WeightedGraph:
    """``n m`` then ``u v w`` lines; w is an integer or ``p/q``. Parallel edges allowed."""
    rows = _data_lines(text)
    n, _ = _header(rows)
    edges = []
    for row in rows[1:]:
        if len(row) not in (2, 3):
            raise FormatError(f"weighted edge line needs 'u v [p/q]': {' '.join(row)!r}")
        try:
            u, v = int(row[0]), int(row[1])
            w = Fraction(row[2]) if len(row) == 3 else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad weighted edge {' '.join(row)!r}") from exc
        edges.append((u, v, w))
    try:
        return WeightedGraph(n, tuple(edges))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_weighted_edge_list(wg: WeightedGraph) -> str:
    lines = [f"{wg.n} {len(wg.edges)}"] + [f"{u} {v} {format_fraction(w)}" for u, v, w in wg.edges]
    return "\n".join(lines) + "\n"


# graph6: N(n) followed by the upper triangle read column by column,
# bits packed big-endian into 6-bit groups offset by 63.

def _encode_n(n: int) -> list[int]:
    if n < 0:
        raise FormatError("negative order")
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise FormatError("order too large for graph6")


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    groups = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(x + 63) for x in _encode_n(g.n) + groups)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(not 0 <= x <= 63 for x in vals):
        raise FormatError(f"invalid graph6 string {text!r}")
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 header")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        rest = vals[8:]
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body length {len(rest)} does not match order {n}")
    bits = [(x >> (5 - k)) & 1 for x in rest for k in range(6)]
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def read_graph(text: str) -> Graph:
    """Edge list if the first data line looks like a header, else graph6."""
    rows = _data_lines(text)
    if rows and len(rows[0]) == 2 and all(t.lstrip("-").isdigit() for t in rows[0]):
        return parse_edge_list(text)
    if len(rows) == 1 and len(rows[0]) == 1:
        return from_graph6(rows[0][0])
    raise FormatError("input is neither an edge list nor a single graph6 string")
