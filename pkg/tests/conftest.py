from __future__ import annotations

import pytest
from hypothesis import strategies as st

from dyncirc.circuit import (
    And, Bit, Circuit, Conditional, Const, Gate, GateKind, Measure, Not, Or, Xor,
    h, if_else, measure, x, y, z,
)


def motivating() -> Circuit:
    # the condition reads a bit nothing writes
    return Circuit(1, 1, (
        x(0), y(0),
        if_else(0, [y(0), x(0), h(0), h(0), z(0), y(0)]),
        y(0), z(0),
    ))


def motivating_baseline() -> Circuit:
    return Circuit(1, 1, (x(0), y(0), if_else(0, [y(0), x(0), z(0), y(0)]), y(0), z(0)))


def motivating_expanded() -> Circuit:
    return Circuit(1, 1, (if_else(
        0,
        [x(0), y(0), y(0), x(0), h(0), h(0), z(0), y(0), y(0), z(0)],
        [x(0), y(0), y(0), z(0)],
    ),))


def motivating_optimized() -> Circuit:
    return Circuit(1, 1, (if_else(0, [], [x(0), z(0)]),))


def measured_prefix() -> Circuit:
    """H, measure into c[0], Z, then branch on c[0]."""
    return Circuit(1, 1, (h(0), measure(0, 0), z(0), if_else(0, [x(0)], [y(0)])))


def nested_pair() -> Conditional:
    """Outer if-body has one gate, else-body two gates and a depth-1 conditional."""
    inner = if_else(1, [x(0)], [y(0)])
    return if_else(0, [h(0)], [x(0), z(0), inner])


def two_paths() -> Circuit:
    return Circuit(2, 1, (
        x(0), y(0), h(1),
        if_else(0, [h(0)], [h(0), x(0), z(1)]),
    ))


_ONE = (GateKind.X, GateKind.Y, GateKind.Z, GateKind.S, GateKind.H)


def exprs(num_clbits: int, max_leaves: int = 4):
    leaf = st.one_of(
        st.builds(Bit, st.integers(0, num_clbits - 1)),
        st.builds(Const, st.booleans()),
    )
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.builds(Not, inner),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Xor, inner, inner),
        ),
        max_leaves=max_leaves,
    )


@st.composite
def instructions(draw, nq: int, nc: int, depth: int):
    choice = draw(st.integers(0, 9 if depth > 0 else 8))
    if choice <= 5 or (choice == 6 and nq < 2):
        return Gate(draw(st.sampled_from(_ONE)), (draw(st.integers(0, nq - 1)),))
    if choice == 6:
        c, t = draw(st.lists(st.integers(0, nq - 1), min_size=2, max_size=2, unique=True))
        return Gate(GateKind.CX, (c, t))
    if choice <= 8:
        return Measure(draw(st.integers(0, nq - 1)), draw(st.integers(0, nc - 1)))
    body = st.lists(instructions(nq, nc, depth - 1), max_size=4)
    return Conditional(draw(exprs(nc)), tuple(draw(body)), tuple(draw(body)))


@st.composite
def circuits(draw, max_qubits: int = 3, max_clbits: int = 2, max_len: int = 8, depth: int = 2):
    nq = draw(st.integers(1, max_qubits))
    nc = draw(st.integers(1, max_clbits))
    instrs = draw(st.lists(instructions(nq, nc, depth), max_size=max_len))
    return Circuit(nq, nc, tuple(instrs))


# --- acceptance criterion reporting ---------------------------------------------

_CRITERIA = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.stash[_CRITERIA] = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None and (rep.when == "call" or rep.failed or rep.skipped):
        number, title = mark.args
        seen = item.config.stash[_CRITERIA]
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        if seen.get(number, (None, "PASS"))[1] == "PASS":
            seen[number] = (title, status)
    return rep


def pytest_terminal_summary(terminalreporter, config):
    seen = config.stash.get(_CRITERIA, {})
    if not seen:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(seen):
        title, status = seen[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
