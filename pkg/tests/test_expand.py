from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import circuits, motivating, motivating_expanded
from dyncirc.circuit import (
    Bit, Circuit, count_conditionals, h, if_else, measure, nesting_depth, program_size, x, y, z,
)
from dyncirc.errors import DependencyViolation
from dyncirc.expand import ExpandConfig, expand_once, rec_branch_expand
from dyncirc.simverify import equivalent


class TestExpandOnce:
    def test_motivating(self):
        c = motivating()
        cdt = c.instrs[2]
        out = expand_once(Circuit(1, 1), Circuit(1, 1, c.instrs[:2]), cdt, Circuit(1, 1, c.instrs[3:]))
        assert out == motivating_expanded()

    def test_identity(self):
        cdt = if_else(0, [x(0)], [y(0)])
        empty = Circuit(1, 1)
        assert expand_once(empty, empty, cdt, empty).instrs == (cdt,)

    def test_measurement_stays_outside(self):
        c0 = Circuit(2, 1, (measure(0, 0),))
        c1 = Circuit(2, 1, (h(1),))
        cdt = if_else(0, [x(0)], [z(0)])
        out = expand_once(c0, c1, cdt, Circuit(2, 1))
        assert out.instrs == (measure(0, 0), if_else(0, [h(1), x(0)], [h(1), z(0)]))
        assert equivalent(c0 + c1 + Circuit(2, 1, (cdt,)), out)

    def test_violation(self):
        with pytest.raises(DependencyViolation):
            expand_once(Circuit(1, 1), Circuit(1, 1, (measure(0, 0),)), if_else(0, [x(0)]), Circuit(1, 1))


class TestRecursive:
    def test_motivating(self):
        assert rec_branch_expand(motivating(), ExpandConfig(1)) == motivating_expanded()

    def test_no_conditionals(self):
        c = Circuit(2, 0, (h(0), x(1), h(0)))
        assert rec_branch_expand(c, 3) == c

    def test_config_validation(self):
        with pytest.raises(ValueError):
            ExpandConfig(-1)

    def test_sequential_conditionals_nest(self):
        # second condition reads a bit measured after the first conditional
        c = Circuit(2, 2, (
            h(0), measure(0, 0),
            if_else(0, [x(1)]),
            h(1), measure(1, 1),
            if_else(1, [z(0)]),
        ))
        out = rec_branch_expand(c, 2)
        assert out.instrs[:2] == (h(0), measure(0, 0))
        (outer,) = out.instrs[2:]
        assert nesting_depth(outer) == 2
        tail = (h(1), measure(1, 1), if_else(1, [z(0)]))
        assert outer.if_body == (x(1),) + tail
        assert outer.else_body == tail
        assert program_size(out) <= 2 * 2 ** 3 * program_size(c)
        assert equivalent(c, out)

    def test_depth_limit_zero_does_not_recurse(self):
        inner = if_else(Bit(1), [x(0)])
        c = Circuit(1, 2, (if_else(0, [y(0), inner, z(0)]), h(0)))
        out = rec_branch_expand(c, 0)
        assert out.instrs == (if_else(0, [y(0), inner, z(0), h(0)], [h(0)]),)
        deeper = rec_branch_expand(c, 1)
        # y(0) writes no bit, so it moves into the inner conditional too
        assert deeper.instrs[0].if_body == (if_else(Bit(1), [y(0), x(0), z(0), h(0)], [y(0), z(0), h(0)]),)

    def test_hook_sees_each_step(self):
        steps = []
        rec_branch_expand(motivating(), 1, on_expand=lambda before, after: steps.append((before, after)))
        assert len(steps) == 1
        assert steps[0][1] == motivating_expanded().instrs

    @settings(max_examples=80, deadline=None)
    @given(circuits(depth=2), st.integers(0, 3))
    def test_properties(self, c, dl):
        steps = []
        out = rec_branch_expand(c, dl, on_expand=lambda b, a: steps.append((b, a)))
        for before, after in steps:
            assert program_size(after, allocation=False) <= 2 * program_size(before, allocation=False)
        assert out == rec_branch_expand(c, dl)
        # at most one conditional per level
        assert sum(1 for i in out.instrs if not hasattr(i, "kind") and hasattr(i, "expr")) <= 1
        assert equivalent(c, out) and equivalent(c, out, initial_clbits=[True] * c.num_clbits)

    def test_recursive_size_bound_on_motivating(self):
        c = motivating()
        for dl in (1, 2, 3):
            bound = count_conditionals(c) * 2 ** (dl * (dl + 1) // 2) * program_size(c)
            assert program_size(rec_branch_expand(c, dl)) <= bound
