"""Exhaustive census over small graph classes and theorem verification.

One enumeration pass per (order, bipartite) computes every invariant once and
aggregates all (connectivity kind, r, min degree) classes at the same time, so
verifying a whole parameter grid costs a single sweep. Sweeps are cached in
process.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Iterator, Optional

import numpy as np

from . import engine
from .extremal import (bound_bipartite, bound_conn, bound_econn_mindeg, bound_vconn_mindeg,
                       build_bip_extremal, conn_extremal, econn_mindeg_extremal,
                       vconn_mindeg_extremal)
from .graph import ClassSpec, ConnKind, Graph, GraphError, _refined_labels, is_isomorphic, make_graph
from .io import to_graph6
from .spanning import tau

DEFAULT_MAX_N = 7
OVERRIDE_MAX_N = 8
BIPARTITE_MAX_N = 9
ENV_MAX_N = "TREEMAX_MAX_N"


class SizeLimitError(GraphError):
    pass


class EmptyClassError(GraphError):
    pass


def max_order(bipartite: bool, override: bool = False) -> int:
    cap = BIPARTITE_MAX_N if bipartite else (OVERRIDE_MAX_N if override else DEFAULT_MAX_N)
    env = os.environ.get(ENV_MAX_N)
    if env:
        try:
            cap = max(cap, int(env))
        except ValueError as exc:
            raise SizeLimitError(f"{ENV_MAX_N}={env!r} is not an integer") from exc
    return min(cap, engine.MAX_BATCH_N)


def check_size(n: int, bipartite: bool, override: bool = False) -> None:
    cap = max_order(bipartite, override)
    if n > cap:
        hint = "" if bipartite or override else " (use --max-n-override or TREEMAX_MAX_N for n = 8)"
        raise SizeLimitError(f"order {n} exceeds the enumeration cap {cap}{hint}")
    if n < 2:
        raise SizeLimitError("census needs n >= 2")


def row_graph(row) -> Graph:
    n = len(row)
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if int(row[i]) >> j & 1])


# -- sweep -----------------------------------------------------------------------

@dataclass
class Sweep:
    n: int
    bipartite: bool
    labeled: int
    connected: int
    cut_violations: int
    classes: dict


def _run(args):
    n, item = args
    return engine.process_item(n, item)


def _sweep(n: int, bipartite: bool, jobs: int) -> Sweep:
    items = engine.work_items(n, bipartite)
    if jobs > 1:
        with Pool(jobs) as pool:
            parts = pool.map(_run, [(n, it) for it in items], chunksize=1)
    else:
        parts = [_run((n, it)) for it in items]
    total = engine.ChunkResult()
    for part in parts:
        total = total.merge(part)
    classes = {k: engine.ClassAgg(a.count, a.max_tau, engine.sort_rows(a.rows))
               for k, a in sorted(total.classes.items())}
    if total.cut_violations:
        raise AssertionError(f"{total.cut_violations} small edge cuts with a side of <= delta vertices")
    return Sweep(n, bipartite, total.labeled, total.connected, total.cut_violations, classes)


_SWEEPS: dict[tuple[int, bool], Sweep] = {}


def sweep(n: int, bipartite: bool = False, jobs: int = 1, override: bool = False,
          use_cache: bool = True) -> Sweep:
    """Single enumeration pass; cached per process since results do not depend on ``jobs``."""
    check_size(n, bipartite, override)
    key = (n, bipartite)
    if not use_cache or key not in _SWEEPS:
        result = _sweep(n, bipartite, jobs)
        if not use_cache:
            return result
        _SWEEPS[key] = result
    return _SWEEPS[key]


# -- census ----------------------------------------------------------------------

class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class CensusReport:
    spec: ClassSpec
    class_size: int
    max_tau: Optional[int]
    maximizers: list[Graph]
    predicted_bound: Optional[int] = None
    predicted_extremals: Optional[list[Graph]] = None
    verdict: Verdict = Verdict.NOT_APPLICABLE
    theorem: Optional[str] = None
    params: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        def num(x):
            return None if x is None else str(x)

        return {
            "theorem": self.theorem,
            "params": self.params,
            "spec": self.spec.as_dict() if self.spec else None,
            "class_size": num(self.class_size),
            "max_tau": num(self.max_tau),
            "maximizers": [to_graph6(g) for g in self.maximizers],
            "predicted_bound": num(self.predicted_bound),
            "predicted_extremals": (None if self.predicted_extremals is None
                                    else [to_graph6(g) for g in self.predicted_extremals]),
            "verdict": self.verdict.value,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    TSV_COLUMNS = ("theorem", "kind", "n", "r", "delta", "bipartite", "class_size", "max_tau",
                   "n_maximizers", "predicted_bound", "verdict")

    def tsv_row(self) -> str:
        s = self.spec
        vals = [self.theorem or "", s.kind.value if s else "", s.n if s else self.params.get("n", ""),
                s.r if s else self.params.get("r", ""),
                "" if s is None or s.delta is None else s.delta,
                s.bipartite if s else "", self.class_size, "" if self.max_tau is None else self.max_tau,
                len(self.maximizers), "" if self.predicted_bound is None else self.predicted_bound,
                self.verdict.value]
        return "\t".join(str(v) for v in vals)


def _matches(spec: ClassSpec, key) -> bool:
    kind, r, delta = key
    return kind == spec.kind.value and r == spec.r and (spec.delta is None or delta == spec.delta)


def dedup_maximizers(graphs: list[Graph]) -> list[Graph]:
    """First representative of each isomorphism class, bucketed by refined degree labels."""
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in graphs:
        key = tuple(sorted(_refined_labels(g)))
        bucket = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, h) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


def census(spec: ClassSpec, jobs: int = 1, override: bool = False) -> CensusReport:
    """Max tau over the class and all maximizers up to isomorphism."""
    sw = sweep(spec.n, spec.bipartite, jobs, override)
    aggs = [a for k, a in sw.classes.items() if _matches(spec, k)]
    if not aggs:
        raise EmptyClassError(f"no graphs in class {spec.as_dict()}")
    size = sum(a.count for a in aggs)
    top = max(a.max_tau for a in aggs)
    rows = engine.sort_rows(np.concatenate([a.rows for a in aggs if a.max_tau == top]))
    maximizers = dedup_maximizers([row_graph(r) for r in rows])
    for g in maximizers:
        # re-derive with the scalar path; guards the batched engine
        if not spec.contains(g) or tau(g) != top:
            raise AssertionError(f"maximizer {g} fails re-validation against {spec.as_dict()}")
    return CensusReport(spec, size, top, maximizers)


def enumerate_class(spec: ClassSpec, override: bool = False) -> Iterator[Graph]:
    """Labeled members of the class in enumeration order.

    Cheap filters (edge count, min degree, connectedness) run before the
    connectivity computation.
    """
    check_size(spec.n, spec.bipartite, override)
    n = spec.n
    for item in engine.work_items(n, spec.bipartite):
        rows = engine.chunk_rows(n, item)
        deg_min = engine.degrees(rows).min(axis=1)
        keep = deg_min >= (spec.delta if spec.delta is not None else 1)
        if spec.delta is not None:
            keep &= deg_min == spec.delta
        rows, deg_min = rows[keep], deg_min[keep]
        keep = engine.connected(rows, n)
        rows, deg_min = rows[keep], deg_min[keep]
        if spec.kind is ConnKind.VERTEX:
            conn = engine.vertex_connectivity(rows, n, deg_min)
        else:
            conn, _ = engine.edge_connectivity(rows, n, deg_min)
        for row in rows[conn == spec.r]:
            yield row_graph(row)


# -- theorem verification -----------------------------------------------------------

class TheoremId(str, Enum):
    CONN = "conn"
    VCONN_MINDEG = "vconn-mindeg"
    ECONN_MINDEG = "econn-mindeg"
    ECONN_EQ = "econn-eq"
    BIP_VCONN = "bip-vconn"
    BIP_ECONN = "bip-econn"


def theorem_domain(tid: TheoremId, n: int, r: int, delta: Optional[int]) -> Optional[str]:
    """None when (n, r, delta) is inside the theorem's hypotheses, else the reason."""
    if r < 1:
        return "r must be positive"
    if tid is TheoremId.CONN:
        return None if n >= r + 1 else "needs n >= r + 1"
    if tid is TheoremId.ECONN_EQ:
        if delta is not None and delta != r:
            return "edge-connectivity equality case needs delta = r"
        return None if n >= r + 1 else "needs n >= r + 1"
    if tid is TheoremId.VCONN_MINDEG:
        if delta is None or delta < r:
            return "needs delta >= r"
        return None if n >= 2 * (delta + 1) - r else "needs n >= 2(delta + 1) - r"
    if tid is TheoremId.ECONN_MINDEG:
        if delta is None or delta <= r:
            return "needs delta > r"
        return None if n >= 2 * delta + 2 else "needs n >= 2 delta + 2"
    if tid in (TheoremId.BIP_VCONN, TheoremId.BIP_ECONN):
        return None if n >= 2 * r else "needs n >= 2r"
    raise ValueError(tid)


def theorem_spec(tid: TheoremId, n: int, r: int, delta: Optional[int]) -> ClassSpec:
    if tid is TheoremId.CONN:
        return ClassSpec(ConnKind.VERTEX, n, r)
    if tid is TheoremId.ECONN_EQ:
        return ClassSpec(ConnKind.EDGE, n, r, r)
    if tid is TheoremId.VCONN_MINDEG:
        return ClassSpec(ConnKind.VERTEX, n, r, delta)
    if tid is TheoremId.ECONN_MINDEG:
        return ClassSpec(ConnKind.EDGE, n, r, delta)
    if tid is TheoremId.BIP_VCONN:
        return ClassSpec(ConnKind.VERTEX, n, r, bipartite=True)
    return ClassSpec(ConnKind.EDGE, n, r, bipartite=True)


def predicted(tid: TheoremId, n: int, r: int, delta: Optional[int]) -> tuple[int, list[Graph]]:
    """Bound value and extremal graphs claimed by the theorem."""
    if tid in (TheoremId.CONN, TheoremId.ECONN_EQ):
        return bound_conn(n, r), [conn_extremal(n, r)]
    if tid is TheoremId.VCONN_MINDEG:
        return bound_vconn_mindeg(n, r, delta), [vconn_mindeg_extremal(n, r, delta)]
    if tid is TheoremId.ECONN_MINDEG:
        return bound_econn_mindeg(n, r, delta), [econn_mindeg_extremal(n, r, delta)]
    graphs = [build_bip_extremal(n, r, "a")]
    if r == 1 and n % 2 == 0 and n >= 4:
        graphs.append(build_bip_extremal(n, r, "b"))
    return bound_bipartite(n, r), graphs


def same_up_to_isomorphism(found: list[Graph], expected: list[Graph]) -> bool:
    if len(found) != len(expected):
        return False
    unmatched = list(expected)
    for g in found:
        hit = next((h for h in unmatched if is_isomorphic(g, h)), None)
        if hit is None:
            return False
        unmatched.remove(hit)
    return True


def verify_theorem(tid: TheoremId | str, n: int, r: int, delta: Optional[int] = None,
                   jobs: int = 1, override: bool = False) -> CensusReport:
    tid = TheoremId(tid)
    params = {"n": n, "r": r, "delta": delta}
    reason = theorem_domain(tid, n, r, delta)
    if reason is not None:
        return CensusReport(None, 0, None, [], theorem=tid.value, params=params,
                            verdict=Verdict.NOT_APPLICABLE, note=reason)
    spec = theorem_spec(tid, n, r, delta)
    report = census(spec, jobs, override)
    bound, extremals = predicted(tid, n, r, delta)
    report.theorem = tid.value
    report.params = params
    report.predicted_bound = bound
    report.predicted_extremals = extremals
    ok = report.max_tau == bound and same_up_to_isomorphism(report.maximizers, extremals)
    report.verdict = Verdict.PASS if ok else Verdict.FAIL
    return report


def admissible_grid(tid: TheoremId | str, max_n: int, max_r: Optional[int] = None) -> list[tuple]:
    """Every (n, r, delta) inside the theorem's hypotheses with n <= max_n."""
    tid = TheoremId(tid)
    out = []
    for n in range(2, max_n + 1):
        for r in range(1, (max_r or n) + 1):
            if tid in (TheoremId.VCONN_MINDEG, TheoremId.ECONN_MINDEG):
                deltas = range(r, n)
            else:
                deltas = [r] if tid is TheoremId.ECONN_EQ else [None]
            for d in deltas:
                if theorem_domain(tid, n, r, d) is None:
                    out.append((n, r, d))
    return out

