"""Execution paths and the four path metrics.

An execution path fixes a branch at every conditional it meets and
flattens the result into straight-line code. Paths are syntactic: every
true/false assignment counts, reachable or not. Condition tests are not
ops; measurements are.

:func:`enumerate_paths` materializes paths and is exponential in the
number of conditionals along a path. :func:`metrics` computes the same
max/min values without enumeration: gate counts are additive over a path,
and for depth it carries sets of per-qubit ASAP frontiers through the
circuit, discarding frontiers that are dominated for the objective at hand.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import asdict, dataclass

from .circuit import Circuit, Conditional, Gate, Instruction, Measure, validate
from .errors import PathExplosion

DEFAULT_PATH_CAP = 20
_NEG = float("-inf")


@dataclass(frozen=True)
class ExecutionPath:
    outcome: tuple[bool, ...]
    ops: tuple[Gate | Measure, ...]


@dataclass(frozen=True)
class MetricsReport:
    max_p_depth: int
    min_p_depth: int
    max_p_gate_count: int
    min_p_gate_count: int
    path_count: int

    def as_dict(self) -> dict:
        return asdict(self)


METRIC_NAMES = ("max_p_depth", "min_p_depth", "max_p_gate_count", "min_p_gate_count")


# --- enumeration ----------------------------------------------------------------


def decision_depth(c: Circuit | Sequence[Instruction]) -> int:
    """Most conditionals met along any single path."""
    instrs = c.instrs if isinstance(c, Circuit) else c
    return sum(1 + max(decision_depth(i.if_body), decision_depth(i.else_body))
               for i in instrs if isinstance(i, Conditional))


def enumerate_paths(c: Circuit, cap: int = DEFAULT_PATH_CAP) -> list[ExecutionPath]:
    """All paths, false branch before true branch at each conditional."""
    validate(c)
    n = decision_depth(c)
    if n > cap:
        raise PathExplosion(n, cap)
    return [ExecutionPath(tuple(o), tuple(ops)) for o, ops in _walk(c.instrs, 0, (), ())]


def _walk(instrs, start, outcome, ops) -> Iterator[tuple[tuple, tuple]]:
    for j in range(start, len(instrs)):
        ins = instrs[j]
        if isinstance(ins, Conditional):
            head = ops + tuple(instrs[start:j])
            for taken, body in ((False, ins.else_body), (True, ins.if_body)):
                for o, p in _walk(body, 0, outcome + (taken,), head):
                    yield from _walk(instrs, j + 1, o, p)
            return
    yield outcome, ops + tuple(instrs[start:])


def replay(c: Circuit, outcome: Sequence[bool]) -> ExecutionPath:
    """Flatten ``c`` along a given outcome vector."""
    it = iter(outcome)
    ops: list = []

    def go(instrs):
        for ins in instrs:
            if isinstance(ins, Conditional):
                go(ins.if_body if next(it) else ins.else_body)
            else:
                ops.append(ins)

    go(c.instrs)
    return ExecutionPath(tuple(outcome), tuple(ops))


def path_depth(p: ExecutionPath | Sequence[Gate | Measure]) -> int:
    ops = p.ops if isinstance(p, ExecutionPath) else p
    last: dict[int, int] = {}
    depth = 0
    for op in ops:
        qs = op.qubits if isinstance(op, Gate) else (op.qubit,)
        layer = 1 + max((last.get(q, 0) for q in qs), default=0)
        for q in qs:
            last[q] = layer
        depth = max(depth, layer)
    return depth


def path_gate_count(p: ExecutionPath | Sequence[Gate | Measure]) -> int:
    ops = p.ops if isinstance(p, ExecutionPath) else p
    return len(ops)


def metrics_by_enumeration(c: Circuit, cap: int = DEFAULT_PATH_CAP) -> MetricsReport:
    paths = enumerate_paths(c, cap)
    depths = [path_depth(p) for p in paths]
    counts = [path_gate_count(p) for p in paths]
    return MetricsReport(max(depths), min(depths), max(counts), min(counts), len(paths))


# --- enumeration-free metrics -----------------------------------------------------


def metrics(c: Circuit) -> MetricsReport:
    validate(c)
    lo, hi, n = _Counts().block(c.instrs)
    return MetricsReport(
        max_p_depth=_DepthSearch(c.num_qubits, maximize=True).depth(c.instrs),
        min_p_depth=_DepthSearch(c.num_qubits, maximize=False).depth(c.instrs),
        max_p_gate_count=hi,
        min_p_gate_count=lo,
        path_count=n,
    )


class _Counts:
    """(min ops, max ops, number of paths) per block, memoized on shared conditionals."""

    def __init__(self):
        self._memo: dict[int, tuple] = {}

    def block(self, instrs) -> tuple[int, int, int]:
        lo = hi = 0
        n = 1
        for ins in instrs:
            if isinstance(ins, Conditional):
                hit = self._memo.get(id(ins))
                if hit is None or hit[0] is not ins:
                    a, b = self.block(ins.if_body), self.block(ins.else_body)
                    hit = (ins, min(a[0], b[0]), max(a[1], b[1]), a[2] + b[2])
                    self._memo[id(ins)] = hit
                lo += hit[1]
                hi += hit[2]
                n *= hit[3]
            else:
                lo += 1
                hi += 1
        return lo, hi, n


class _DepthSearch:
    """Best/worst ASAP depth over all paths.

    A frontier is the tuple of last occupied layers per qubit. Layering is
    monotone in the frontier, so a frontier that is componentwise below
    another can never give a larger final depth; the search keeps only the
    maximal frontiers (worst case) or minimal ones (best case).

    A straight-line run is compiled to a max-plus matrix ``W`` with
    ``out[j] = max_i(v[i] + W[i][j])``. Conditionals are memoized on
    ``(conditional, frontier shifted to min 0)`` since layering commutes
    with a uniform shift.
    """

    def __init__(self, num_qubits: int, maximize: bool):
        self.nq = num_qubits
        self.maximize = maximize
        self._segments: dict[int, tuple] = {}
        self._cond: dict[tuple, tuple] = {}

    def depth(self, instrs) -> int:
        start = (0,) * self.nq
        finals = self.run(instrs, [start])
        ends = [max(v, default=0) for v in finals]
        return max(ends) if self.maximize else min(ends)

    def run(self, instrs, frontiers: list[tuple]) -> list[tuple]:
        for seg in self._compile(instrs):
            if isinstance(seg, Conditional):
                out: set[tuple] = set()
                for v in frontiers:
                    out.update(self._through(seg, v))
                frontiers = self._prune(out)
            else:
                frontiers = self._prune({_apply(seg, v) for v in frontiers})
        return frontiers

    def _through(self, cdt: Conditional, v: tuple) -> list[tuple]:
        m = min(v, default=0)
        key = (id(cdt), tuple(a - m for a in v))
        hit = self._cond.get(key)
        if hit is None or hit[0] is not cdt:
            base = [key[1]]
            res = self._prune(set(self.run(cdt.if_body, base)) | set(self.run(cdt.else_body, base)))
            hit = (cdt, res)
            self._cond[key] = hit
        return [tuple(a + m for a in u) for u in hit[1]]

    def _compile(self, instrs) -> tuple:
        hit = self._segments.get(id(instrs))
        if hit is not None and hit[0] is instrs:
            return hit[1]
        segs: list = []
        run: list = []
        for ins in instrs:
            if isinstance(ins, Conditional):
                if run:
                    segs.append(_matrix(run, self.nq))
                    run = []
                segs.append(ins)
            else:
                run.append(ins)
        if run:
            segs.append(_matrix(run, self.nq))
        self._segments[id(instrs)] = (instrs, tuple(segs))
        return tuple(segs)

    def _prune(self, vs) -> list[tuple]:
        vs = list(vs)
        if len(vs) < 2:
            return vs
        if self.maximize:
            def below(a, b):
                return all(x <= y for x, y in zip(a, b))
        else:
            def below(a, b):
                return all(x >= y for x, y in zip(a, b))
        # sort so that potential dominators come first
        vs.sort(key=sum, reverse=self.maximize)
        kept: list[tuple] = []
        for v in vs:
            if not any(below(v, k) for k in kept):
                kept.append(v)
        return kept


def _matrix(ops, nq: int) -> tuple[tuple[float, ...], ...]:
    w = [[0 if i == j else _NEG for j in range(nq)] for i in range(nq)]
    for op in ops:
        qs = op.qubits if isinstance(op, Gate) else (op.qubit,)
        for row in w:
            m = max(row[q] for q in qs) + 1
            for q in qs:
                row[q] = m
    return tuple(tuple(r) for r in w)


def _apply(w, v: tuple) -> tuple:
    nq = len(v)
    return tuple(
        int(max(v[i] + w[i][j] for i in range(nq)))
        for j in range(nq)
    )
