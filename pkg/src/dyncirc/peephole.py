"""Peephole gate cancellation standing in for an external transpiler.

Rules, applied to a fixpoint inside every straight-line region:

* ``X X``, ``Y Y``, ``H H`` on one qubit and ``CX CX`` with the same
  control and target cancel;
* ``S S`` becomes ``Z`` and ``Z Z`` cancels. Since S and Z commute, a run of
  adjacent S/Z gates on one qubit is folded into a single power of S and
  written back as nothing, ``S``, ``Z`` or ``S Z``. Without the folding,
  greedy ``S S -> Z`` can strand ``Z S Z`` and make a merged region come
  out longer than its two halves optimized apart.

Two gates are adjacent when nothing in between touches any of their qubits.
A measurement blocks its own qubit. A conditional blocks every qubit: its
bodies are optimized on their own and nothing moves across its boundary,
which is exactly the limitation branch expansion works around. A
conditional left with two empty bodies is dropped.

The rewrite runs as a single left-to-right pass with one stack per qubit.
Every surviving instruction is checked against its predecessor when pushed,
so the output has no adjacent matching pair and is its own fixpoint.
"""

from __future__ import annotations

from collections.abc import Sequence

from .circuit import Circuit, Conditional, Gate, GateKind, Instruction, Measure, validate
from .expand import ExpandConfig, rec_branch_expand

# quarter turns about Z
_PHASE = {GateKind.S: 1, GateKind.Z: 2}
_PHASE_GATES = {1: (GateKind.S,), 2: (GateKind.Z,), 3: (GateKind.S, GateKind.Z)}


class _PhaseRun:
    """Adjacent S/Z gates on one qubit, folded into S**exponent (exponent 1..3)."""

    __slots__ = ("qubit", "exponent")

    def __init__(self, qubit: int, exponent: int):
        self.qubit = qubit
        self.exponent = exponent

    def gates(self) -> tuple[Gate, ...]:
        return tuple(Gate(k, (self.qubit,)) for k in _PHASE_GATES[self.exponent])


def optimize(c: Circuit) -> Circuit:
    validate(c)
    return c.with_instrs(_Optimizer(c.num_qubits).block(c.instrs))


def optimize_pipeline(c: Circuit, cfg: ExpandConfig | int = 1) -> Circuit:
    """Branch expansion followed by :func:`optimize`."""
    return optimize(rec_branch_expand(c, cfg))


class _Optimizer:
    def __init__(self, num_qubits: int):
        self.nq = num_qubits
        # expanded circuits share conditional objects between copies
        self._memo: dict[int, tuple[Conditional, Conditional | None]] = {}

    def conditional(self, cdt: Conditional) -> Conditional | None:
        hit = self._memo.get(id(cdt))
        if hit is not None and hit[0] is cdt:
            return hit[1]
        ib, eb = self.block(cdt.if_body), self.block(cdt.else_body)
        out = None if not ib and not eb else Conditional(cdt.expr, ib, eb)
        self._memo[id(cdt)] = (cdt, out)
        return out

    def block(self, instrs: Sequence[Instruction]) -> tuple[Instruction, ...]:
        slots: list[Instruction | None] = []
        stacks: list[list[int]] = [[] for _ in range(self.nq)]

        def place1(g: Gate) -> None:
            q = g.qubits[0]
            st = stacks[q]
            prev = slots[st[-1]] if st else None
            if g.kind in _PHASE:
                if type(prev) is _PhaseRun:
                    e = (prev.exponent + _PHASE[g.kind]) % 4
                    if e:
                        slots[st[-1]] = _PhaseRun(q, e)
                    else:
                        slots[st.pop()] = None
                    return
                slots.append(_PhaseRun(q, _PHASE[g.kind]))
            elif type(prev) is Gate and prev.kind is g.kind:
                # same single-qubit involution on the same qubit
                slots[st.pop()] = None
                return
            else:
                slots.append(g)
            st.append(len(slots) - 1)

        for ins in instrs:
            if type(ins) is Gate:
                if ins.kind is GateKind.CX:
                    c, t = ins.qubits
                    sc, st = stacks[c], stacks[t]
                    if sc and st and sc[-1] == st[-1] and slots[sc[-1]] == ins:
                        slots[sc.pop()] = None
                        st.pop()
                        continue
                    slots.append(ins)
                    sc.append(len(slots) - 1)
                    st.append(len(slots) - 1)
                else:
                    place1(ins)
            elif type(ins) is Measure:
                slots.append(ins)
                stacks[ins.qubit].append(len(slots) - 1)
            else:
                new = self.conditional(ins)
                if new is None:
                    continue
                slots.append(new)
                idx = len(slots) - 1
                for st in stacks:
                    st.append(idx)
        out: list[Instruction] = []
        for i in slots:
            if type(i) is _PhaseRun:
                out.extend(i.gates())
            elif i is not None:
                out.append(i)
        return tuple(out)
