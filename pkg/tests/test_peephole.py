from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from conftest import circuits, motivating, motivating_baseline, motivating_optimized
from dyncirc.circuit import Circuit, cx, h, if_else, measure, program_size, s, x, y, z
from dyncirc.expand import rec_branch_expand
from dyncirc.pathmetrics import decision_depth, metrics, path_depth, path_gate_count, replay
from dyncirc.peephole import optimize, optimize_pipeline
from dyncirc.randgen import GenConfig, gen_pattern1
from dyncirc.simverify import equivalent


class TestRules:
    def test_motivating_baseline(self):
        assert optimize(motivating()) == motivating_baseline()

    def test_s_pair(self):
        assert optimize(Circuit(1, 0, (s(0), s(0)))).instrs == (z(0),)

    @pytest.mark.parametrize("gates,expected", [
        ((s(0), s(0), s(0), s(0)), ()),
        ((s(0), z(0), s(0)), ()),
        ((z(0), s(0), z(0)), (s(0),)),
        ((s(0), s(0), s(0)), (s(0), z(0))),
    ])
    def test_phase_folding(self, gates, expected):
        out = optimize(Circuit(1, 0, gates))
        assert out.instrs == expected
        assert equivalent(Circuit(1, 0, gates), out)

    def test_transparent_disjoint_qubit(self):
        c = Circuit(2, 0, (x(0), h(1), x(0)))
        out = optimize(c)
        assert out.instrs == (h(1),)
        assert equivalent(c, out)

    def test_cx_pairs(self):
        assert optimize(Circuit(2, 0, (cx(0, 1), cx(0, 1)))).instrs == ()
        kept = (cx(0, 1), cx(1, 0))
        assert optimize(Circuit(2, 0, kept)).instrs == kept
        assert optimize(Circuit(2, 0, (cx(0, 1), x(1), cx(0, 1)))).instrs == (cx(0, 1), x(1), cx(0, 1))

    def test_measure_blocks_own_qubit_only(self):
        c = Circuit(2, 1, (x(0), x(1), measure(0, 0), x(0), x(1)))
        assert optimize(c).instrs == (x(0), measure(0, 0), x(0))

    def test_conditional_is_barrier(self):
        c = Circuit(2, 1, (x(1), if_else(0, [z(0)]), x(1)))
        assert optimize(c) == c

    def test_empty_conditional_dropped_and_stops_blocking(self):
        c = Circuit(1, 1, (x(0), if_else(0, [h(0), h(0)], [y(0), y(0)]), x(0)))
        assert optimize(c).instrs == ()

    def test_cancelling_pairs_vanish(self):
        c = Circuit(2, 0, (h(0), cx(0, 1), y(1), y(1), cx(0, 1), h(0)))
        assert optimize(c).instrs == ()


def test_pipeline_motivating():
    out = optimize_pipeline(motivating(), 1)
    assert out == motivating_optimized()


@settings(max_examples=80, deadline=None)
@given(circuits(depth=2, max_len=10))
def test_invariants(c):
    out = optimize(c)
    assert optimize(out) == out
    assert program_size(out) <= program_size(c)
    assert equivalent(c, out)


def test_pipeline_never_worse_on_sample():
    c = gen_pattern1(GenConfig(n=3, d_s=5, k=3, seed=7))
    base, piped = metrics(optimize(c)), metrics(optimize_pipeline(c, 1))
    assert piped.max_p_depth <= base.max_p_depth
    assert piped.min_p_depth <= base.min_p_depth
    assert piped.max_p_gate_count <= base.max_p_gate_count
    assert piped.min_p_gate_count <= base.min_p_gate_count


def test_per_path_dominance():
    checked = 0
    for seed in range(40):
        for k in (2, 3, 4):
            c = gen_pattern1(GenConfig(k=k, seed=seed))
            b, p = optimize(c), optimize(rec_branch_expand(c, 1))
            if decision_depth(b) != k or decision_depth(p) != k:
                continue  # a branch pair optimized away; outcome vectors no longer line up
            for o in itertools.product((False, True), repeat=k):
                pb, pp = replay(b, o), replay(p, o)
                assert path_gate_count(pp) <= path_gate_count(pb)
                assert path_depth(pp) <= path_depth(pb)
                checked += 1
    assert checked > 1000
