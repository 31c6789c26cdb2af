import random
from fractions import Fraction

import pytest
from helpers import legal_steps, random_walk, random_weighted_graph
from hypothesis import given, settings
from hypothesis import strategies as st

from treemax import extremal as ex
from treemax.graph import complete, cycle, make_graph, path, star
from treemax.reduce import (
    ReductionError,
    ReductionLedger,
    has_parallel,
    merge_parallel,
    merge_serial,
    mesh_to_star,
    reduce_ledger,
    reduce_to_tau,
    serial_candidates,
)
from treemax.spanning import WeightedGraph, tau, tau_weighted

F = Fraction


def ledger_of(n, *edges, terminals=()):
    return ReductionLedger.start(WeightedGraph(n, tuple((u, v, F(w)) for u, v, w in edges)), terminals)


class TestParallel:
    def test_two_edges_sum(self):
        out = merge_parallel(ledger_of(2, (0, 1, F(1, 3)), (1, 0, 2)))
        assert [w for *_, w in out.graph.edges] == [F(7, 3)]
        assert out.multiplier == 1

    def test_no_parallel_is_identity(self):
        led = ledger_of(3, (0, 1, 1), (1, 2, 1))
        assert not has_parallel(led)
        assert merge_parallel(led).graph == led.graph

    def test_triple_unit_bundle(self):
        out = merge_parallel(ledger_of(2, (0, 1, 1), (0, 1, 1), (0, 1, 1)))
        assert [w for *_, w in out.graph.edges] == [3]

    def test_idempotent(self):
        rng = random.Random(2)
        for _ in range(30):
            once = merge_parallel(ReductionLedger.start(random_weighted_graph(rng, 5)))
            assert merge_parallel(once).graph == once.graph


class TestSerial:
    def test_path_middle(self):
        out = merge_serial(ledger_of(3, (0, 1, 1), (1, 2, 1)), 1)
        assert out.multiplier == 2 and [w for *_, w in out.graph.edges] == [F(1, 2)]
        assert out.value() == 1

    def test_weights_one_and_two(self):
        out = merge_serial(ledger_of(3, (0, 1, 1), (1, 2, 2)), 1)
        assert out.multiplier == 3 and [w for *_, w in out.graph.edges] == [F(2, 3)]
        assert out.labels == (0, 2)

    def test_rejections(self):
        with pytest.raises(ReductionError):
            merge_serial(ReductionLedger.start(star(3)), 0)  # degree 3
        with pytest.raises(ReductionError):
            merge_serial(ledger_of(2, (0, 1, 1), (0, 1, 1)), 0)  # both edges go to the same neighbor
        with pytest.raises(ReductionError):
            merge_serial(ledger_of(3, (0, 1, 1), (1, 2, 1), terminals={1}), 1)

    def test_candidates_skip_terminals(self):
        led = ReductionLedger.start(cycle(4), terminals={0, 2})
        assert serial_candidates(led) == [1, 3]


class TestMeshStar:
    def test_triangle(self):
        out = mesh_to_star(ReductionLedger.start(complete(3)), [0, 1, 2])
        assert out.multiplier == F(1, 9)
        assert sorted(w for *_, w in out.graph.edges) == [3, 3, 3]
        assert tau_weighted(out.graph) == 27 and out.value() == 3
        assert out.labels[-1] == "c0"

    def test_single_edge(self):
        out = mesh_to_star(ReductionLedger.start(complete(2)), [0, 1])
        assert tau_weighted(out.graph) == 4 and out.multiplier == F(1, 4) and out.value() == 1

    def test_rejections(self):
        with pytest.raises(ReductionError):
            mesh_to_star(ledger_of(3, (0, 1, 2), (1, 2, 1), (0, 2, 1)), [0, 1, 2])
        with pytest.raises(ReductionError):
            mesh_to_star(ReductionLedger.start(path(3)), [0, 1, 2])
        with pytest.raises(ReductionError):
            mesh_to_star(ReductionLedger.start(complete(3)), [0])

    @pytest.mark.parametrize("g", [complete(3), complete(4), complete(5), ex.build_M(ex.MParams(3, 3, 1)),
                                   ex.build_M(ex.MParams(4, 3, 2))])
    def test_star_then_reduce_preserves_tau(self, g):
        led = ReductionLedger.start(g)
        led = mesh_to_star(led, [0, 1, 2])
        assert reduce_ledger(led).value() == tau(g)


class TestReduceToTau:
    def test_examples(self):
        assert reduce_to_tau(cycle(4)) == 4
        assert reduce_to_tau(ex.build_M(ex.MParams(2, 2, 2))) == 4
        assert reduce_to_tau(make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])) == 1

    def test_cycle_collapses_to_an_edge(self):
        led = reduce_ledger(ReductionLedger.start(cycle(6)))
        assert led.graph.n == 2 and len(led.graph.edges) == 1
        assert led.value() == 6

    def test_trace_records_every_step(self):
        led = reduce_ledger(ReductionLedger.start(cycle(4)))
        assert any(s.startswith("serial") for s in led.steps)
        assert any(s.startswith("parallel") for s in led.steps)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_step_sequences_keep_the_invariant(seed):
    rng = random.Random(seed)
    original = random_weighted_graph(rng, rng.randint(2, 7))
    start = ReductionLedger.start(original)
    led, _ = random_walk(rng, start, max_steps=12)
    assert led.value() == start.value() == tau_weighted(original)


def test_exhausted_ledger_has_no_parallel_or_serial_steps():
    rng = random.Random(9)
    for _ in range(40):
        led = reduce_ledger(ReductionLedger.start(random_weighted_graph(rng, 6)))
        kinds = {k for k, _ in legal_steps(led)}
        assert not kinds & {"parallel", "serial"}
