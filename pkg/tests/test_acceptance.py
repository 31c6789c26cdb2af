"""End-to-end acceptance checks, exact (zero tolerance) throughout.

Each test records one PASS/FAIL line, echoed in the terminal summary.
"""
import itertools
import json
import random
import subprocess
import sys
from fractions import Fraction

import networkx as nx
import pytest
from helpers import random_graph, random_walk, random_weighted_graph

from treemax import extremal as ex
from treemax.graph import (
    add_edge,
    complement,
    complete,
    dedup_isomorphic,
    empty,
    generalized_join,
    is_complete,
    is_connected,
    make_graph,
    partial_shift,
    shift_hypothesis_witnesses,
)
from treemax.reduce import ReductionLedger, mesh_to_star, reduce_ledger
from treemax.search import (
    TheoremId,
    Verdict,
    admissible_grid,
    same_up_to_isomorphism,
    verify_theorem,
)
from treemax.spanning import tau, tau_generalized_join, tau_oracle, tau_weighted


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def test_c01_matrix_tree_matches_oracle(record):
    rng = random.Random(1)
    five = list(all_labeled_graphs(5))
    six = [random_graph(rng, 6, rng.uniform(0.3, 0.9)) for _ in range(600)]
    seven = [make_graph(7, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    bad = [g for g in five + six + seven if tau(g) != tau_oracle(g)]
    ok = len(five) == 1024 and len(seven) == 1044 and not bad
    record(1, "matrix-tree vs subset oracle", ok,
           f"{len(five)} labeled 5-vertex, {len(six)} random 6-vertex, "
           f"{len(seven)} unlabeled 7-vertex; mismatches={len(bad)}")
    assert ok


def test_c02_clique_join_closed_form(record):
    bad, checked = [], 0
    for s in range(0, 4):
        for t in range(1, 4):
            for parts in itertools.product(range(1, 4), repeat=t):
                if s == 0 and t >= 2:
                    continue  # disjoint cliques: disconnected, outside the formula
                p = ex.JoinParams(s, parts)
                checked += 1
                if ex.tau_clique_join(p) != tau(ex.build_clique_join(p)):
                    bad.append(p)
    spot = ex.tau_clique_join(ex.JoinParams(1, (1, 3)))
    ok = not bad and spot == 16
    record(2, "clique-join closed form", ok, f"{checked} instances, (1;1,3) -> {spot}")
    assert ok


def m_pipeline(p: ex.MParams) -> Fraction:
    """Star out both cliques, then exhaust parallel/serial merges."""
    ledger = ReductionLedger.start(ex.build_M(p))
    for block in (range(p.n1), range(p.n1, p.n1 + p.n2)):
        if len(block) >= 2:
            ledger = mesh_to_star(ledger, [ledger.index(v) for v in block])
    return reduce_ledger(ledger).value()


def test_c03_m_graph_closed_form_and_pipeline(record):
    bad, checked = [], 0
    for n1 in range(1, 6):
        for n2 in range(1, n1 + 1):
            for q in range(1, n2 + 1):
                p = ex.MParams(n1, n2, q)
                checked += 1
                closed = ex.tau_M(p)
                if not (closed == tau(ex.build_M(p)) == m_pipeline(p)):
                    bad.append(p)
    spots = (ex.tau_M(ex.MParams(2, 2, 2)), ex.tau_M(ex.MParams(3, 3, 1)))
    ok = not bad and spots == (4, 9)
    record(3, "M-graph closed form and mesh-star pipeline", ok,
           f"{checked} instances, M(2,2,2)={spots[0]}, M(3,3,1)={spots[1]}")
    assert ok


def test_c04_b_graph_formulas(record):
    bad, checked = [], 0
    for a in itertools.product(range(9), repeat=6):
        if sum(a) > 8:
            continue
        p = ex.BParams(a)
        g = ex.build_B(p)
        if g.n == 0 or not is_connected(g):
            continue
        checked += 1
        if ex.tau_B(p) != tau(g):
            bad.append(a)
    fam = 0
    for a3 in range(1, 6):
        for r in range(1, 4):
            for a6 in range(0, 5):
                fam += 1
                if ex.tau_B_pendant_family(a3, r, a6) != tau(ex.build_B(ex.BParams.of(1, 0, a3, 0, r, a6))):
                    bad.append(("family", a3, r, a6))
    spots = (ex.tau_B(ex.BParams.of(1, 0, 3, 0, 1, 2)), ex.tau_B(ex.BParams.of(1, 0, 1, 1, 1, 1)))
    ok = not bad and spots == (81, 1)
    record(4, "B-graph factorization and pendant family", ok,
           f"{checked} connected B-graphs of order <= 8, {fam} family members, spots {spots}")
    assert ok


def test_c05_generalized_join(record):
    pool = [complete(1), complete(2), complete(3), empty(2), empty(3)]
    bases = []
    for k in range(1, 5):
        bases += dedup_isomorphic(g for g in all_labeled_graphs(k) if is_connected(g))
    bad, checked = [], 0
    for base in bases:
        for parts in itertools.product(pool, repeat=base.n):
            checked += 1
            if tau_generalized_join(base, parts) != tau(generalized_join(base, parts)):
                bad.append((base, parts))
    k23 = tau_generalized_join(complete(2), [empty(2), empty(3)])
    ok = not bad and k23 == 12
    record(5, "generalized join product formula", ok,
           f"{len(bases)} bases, {checked} assemblies, K_2,3 -> {k23}")
    assert ok


def test_c06_reduction_ledger_invariant(record):
    rng = random.Random(6)
    bad, steps = 0, 0
    trials = 250
    for _ in range(trials):
        wg = random_weighted_graph(rng, rng.randint(2, 7))
        ledger, taken = random_walk(rng, ReductionLedger.start(wg), max_steps=rng.randint(1, 10))
        steps += taken
        if ledger.multiplier * tau_weighted(ledger.graph) != tau_weighted(wg):
            bad += 1
    ok = bad == 0 and steps > trials
    record(6, "reduction ledger invariant", ok, f"{trials} graphs, {steps} steps, violations={bad}")
    assert ok


def _theorem_grid(tid, max_n, max_r=None):
    reports = [verify_theorem(tid, n, r, d) for n, r, d in admissible_grid(tid, max_n, max_r)]
    return reports, [rep for rep in reports if rep.verdict is not Verdict.PASS]


def _value(reports, n, r, d=None):
    return next(rep.max_tau for rep in reports if rep.params == {"n": n, "r": r, "delta": d})


@pytest.mark.slow
def test_c07_vconn_mindeg_census(record):
    reports, failed = _theorem_grid(TheoremId.VCONN_MINDEG, 7)
    unique = all(len(rep.maximizers) == 1 for rep in reports)
    spot = _value(reports, 7, 1, 2)
    ok = reports and not failed and unique and spot == 375
    record(7, "min-degree / vertex-connectivity census", ok,
           f"{len(reports)} tuples, failures={len(failed)}, (7,1,2) -> {spot}")
    assert ok


@pytest.mark.slow
def test_c08_econn_mindeg_census(record):
    reports, failed = _theorem_grid(TheoremId.ECONN_MINDEG, 7)
    unique = all(len(rep.maximizers) == 1 for rep in reports)
    spots = (_value(reports, 6, 1, 2), _value(reports, 7, 1, 2))
    ok = reports and not failed and unique and spots == (9, 48)
    record(8, "min-degree / edge-connectivity census", ok,
           f"{len(reports)} tuples, failures={len(failed)}, (6,1,2),(7,1,2) -> {spots}")
    assert ok


def _bipartite_counts_ok(reports):
    for rep in reports:
        n, r = rep.params["n"], rep.params["r"]
        expected = 2 if r == 1 and n % 2 == 0 and n >= 4 else 1
        if len(rep.maximizers) != expected:
            return False
    return True


@pytest.mark.slow
def test_c09_bipartite_vconn_census(record):
    reports, failed = _theorem_grid(TheoremId.BIP_VCONN, 9, 3)
    spots = (_value(reports, 4, 2), _value(reports, 6, 1), _value(reports, 7, 2))
    ok = reports and not failed and _bipartite_counts_ok(reports) and spots == (4, 12, 216)
    record(9, "bipartite vertex-connectivity census", ok,
           f"{len(reports)} tuples, failures={len(failed)}, spots {spots}")
    assert ok


@pytest.mark.slow
def test_c10_bipartite_econn_census(record):
    vrep, _ = _theorem_grid(TheoremId.BIP_VCONN, 9, 3)
    erep, failed = _theorem_grid(TheoremId.BIP_ECONN, 9, 3)
    same = len(vrep) == len(erep) and all(
        v.params == e.params and v.max_tau == e.max_tau and same_up_to_isomorphism(v.maximizers, e.maximizers)
        for v, e in zip(vrep, erep))
    ok = erep and not failed and same
    record(10, "bipartite edge-connectivity census", ok,
           f"{len(erep)} tuples, failures={len(failed)}, identical to vertex version: {same}")
    assert ok


def test_c11_monotonicity(record):
    edge_add = 0
    bad = []
    for n in range(2, 6):
        for g in all_labeled_graphs(n):
            if not is_connected(g) or is_complete(g):
                continue
            t = tau(g)
            for e in complement(g).edges:
                edge_add += 1
                if not tau(add_edge(g, e)) > t:
                    bad.append(("add", g, e))

    rng = random.Random(11)
    shifts = 0
    while shifts < 150:
        g = random_graph(rng, rng.randint(4, 8), rng.uniform(0.3, 0.8))
        for v, w, v1, _ in shift_hypothesis_witnesses(g)[:3]:
            shifts += 1
            if not tau(partial_shift(g, v, v1, w)) > tau(g):
                bad.append(("shift", g, v, v1, w))

    f_steps = 0
    for s in range(0, 11):
        for x in range(2, 51):
            f_steps += 1
            if not ex.check_lemma_f(s, x):
                bad.append(("f", s, x))

    def rnd(lo, hi):
        return Fraction(rng.randint(int(lo * 8), int(hi * 8)), 8)

    for _ in range(1000):
        alpha, beta = rnd(0.125, 12), rnd(0.125, 12)
        gamma = rnd(-6, float(alpha + beta) - 0.125)
        if not ex.check_ineq_1(alpha, beta, gamma):
            bad.append(("ineq1", alpha, beta, gamma))
        xi = rnd(0.125, 6)
        alpha, beta, gamma = xi + rnd(0, 8), xi + rnd(0, 8), rnd(0.125, 10)
        if not ex.check_ineq_2(alpha, beta, gamma, xi):
            bad.append(("ineq2", alpha, beta, gamma, xi))
    ok = not bad
    record(11, "monotonicity and inequality lemmas", ok,
           f"{edge_add} edge additions, {shifts} partial shifts, {f_steps} f steps, "
           f"2000 inequality draws; violations={len(bad)}")
    assert ok


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "treemax", *args], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_c12_deterministic_reports(record):
    runs = [
        ("verify", "--theorem", "vconn-mindeg", "--n", "6", "--r", "1", "--delta", "2"),
        ("search", "--kind", "edge", "--n", "6", "--r", "2"),
        ("verify", "--theorem", "bip-vconn", "--n", "8", "--r", "1"),
    ]
    mismatched = []
    for args in runs:
        outs = {_cli(*args, "--jobs", str(j)) for j in (1, 2, 3)}
        outs.add(_cli(*args, "--jobs", "1"))
        if len(outs) != 1 or next(iter(outs))[0] != 0:
            mismatched.append(args)
        else:
            json.loads(next(iter(outs))[1])
    ok = not mismatched
    record(12, "byte-identical reports across --jobs", ok,
           f"{len(runs)} commands x jobs 1,2,3 plus a repeat; mismatches={len(mismatched)}")
    assert ok
