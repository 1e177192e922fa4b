"""Statevector simulation of dynamic circuits and equivalence checking.

Simulation keeps an ensemble of branches, each a classical record, a
normalized statevector and a probability. All branches advance together as
one batched array; a measurement splits every branch in two, and a
conditional routes each branch to the body its record selects.

Conventions: qubit 0 is the least-significant bit of the amplitude index;
``CX(q0, q1)`` uses ``q0`` as control. Classical bits start false.

Two circuits are equivalent when, for each classical record, they produce
it with the same probability and leave the same mixed state behind. The
comparison never looks at individual branches, so branch order, splitting
and global phase do not matter.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .circuit import And, Bit, Circuit, Conditional, Const, Gate, GateKind, Measure, Not, Or, validate
from .errors import QubitCapExceeded, ShapeMismatch

DEFAULT_QUBIT_CAP = 10
PRUNE_TOL = 1e-12

_SQ2 = 1 / np.sqrt(2)
MATRICES = {
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.H: np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=complex),
}


@dataclass(frozen=True)
class EnsembleBranch:
    clbits: tuple[bool, ...]
    state: np.ndarray
    prob: float


@dataclass
class Ensemble:
    """Batched branches: ``states`` is (B, 2**n), ``clbits`` (B, m), ``probs`` (B,)."""

    states: np.ndarray
    clbits: np.ndarray
    probs: np.ndarray

    @property
    def branches(self) -> list[EnsembleBranch]:
        return [
            EnsembleBranch(tuple(bool(b) for b in cb), st, float(p))
            for cb, st, p in zip(self.clbits, self.states, self.probs)
        ]

    def __len__(self) -> int:
        return len(self.probs)

    def total_probability(self) -> float:
        return float(self.probs.sum())

    def take(self, idx) -> Ensemble:
        return Ensemble(self.states[idx], self.clbits[idx], self.probs[idx])

    @staticmethod
    def join(parts: Sequence[Ensemble]) -> Ensemble:
        return Ensemble(
            np.concatenate([p.states for p in parts]),
            np.concatenate([p.clbits for p in parts]),
            np.concatenate([p.probs for p in parts]),
        )


def simulate(c: Circuit, *, initial_clbits: Sequence[bool] | None = None,
             max_qubits: int = DEFAULT_QUBIT_CAP) -> Ensemble:
    validate(c)
    if c.num_qubits > max_qubits:
        raise QubitCapExceeded(f"{c.num_qubits} qubits exceeds simulation cap {max_qubits}")
    dim = 2 ** c.num_qubits
    states = np.zeros((1, dim), dtype=complex)
    states[0, 0] = 1.0
    clbits = np.zeros((1, c.num_clbits), dtype=bool)
    if initial_clbits is not None:
        if len(initial_clbits) != c.num_clbits:
            raise ShapeMismatch("initial_clbits length differs from num_clbits")
        clbits[0] = np.asarray(initial_clbits, dtype=bool)
    ens = Ensemble(states, clbits, np.ones(1))
    return _run(c.instrs, ens, c.num_qubits)


def _run(instrs, ens: Ensemble, n: int) -> Ensemble:
    for ins in instrs:
        if len(ens) == 0:
            break
        if isinstance(ins, Gate):
            ens.states = _apply_gate(ens.states, ins, n)
        elif isinstance(ins, Measure):
            ens = _measure(ens, ins, n)
        else:
            ens = _branch(ens, ins, n)
    return ens


def _tensor(states: np.ndarray, n: int) -> np.ndarray:
    return states.reshape((states.shape[0],) + (2,) * n)


def _axis(q: int, n: int) -> int:
    # axis 0 is the batch; C order puts the least-significant bit last
    return n - q


def _apply_gate(states: np.ndarray, g: Gate, n: int) -> np.ndarray:
    psi = _tensor(states, n).copy()
    if g.kind is GateKind.CX:
        c, t = g.qubits
        sel = [slice(None)] * (n + 1)
        sel[_axis(c, n)] = 1
        sub = psi[tuple(sel)]  # view with control = 1
        # after indexing out the control axis, the target axis shifts if it came later
        t_ax = _axis(t, n) - (1 if _axis(t, n) > _axis(c, n) else 0)
        psi[tuple(sel)] = np.flip(sub, axis=t_ax)
        return psi.reshape(states.shape)
    ax = _axis(g.qubits[0], n)
    out = np.tensordot(psi, MATRICES[g.kind], axes=([ax], [1]))
    out = np.moveaxis(out, -1, ax)
    return out.reshape(states.shape)


def _measure(ens: Ensemble, m: Measure, n: int) -> Ensemble:
    psi = _tensor(ens.states, n)
    ax = _axis(m.qubit, n)
    parts = []
    for outcome in (0, 1):
        proj = np.zeros_like(psi)
        sel = [slice(None)] * (n + 1)
        sel[ax] = outcome
        proj[tuple(sel)] = psi[tuple(sel)]
        flat = proj.reshape(ens.states.shape)
        p = np.einsum("bi,bi->b", flat, flat.conj()).real
        keep = p > PRUNE_TOL
        if not keep.any():
            continue
        cb = ens.clbits[keep].copy()
        cb[:, m.clbit] = bool(outcome)
        parts.append(Ensemble(flat[keep] / np.sqrt(p[keep])[:, None], cb, ens.probs[keep] * p[keep]))
    return Ensemble.join(parts)


def eval_batch(expr, clbits: np.ndarray) -> np.ndarray:
    """Evaluate a condition for every row of a (B, m) boolean array."""
    if isinstance(expr, Bit):
        return clbits[:, expr.index]
    if isinstance(expr, Const):
        return np.full(clbits.shape[0], bool(expr.value))
    if isinstance(expr, Not):
        return ~eval_batch(expr.arg, clbits)
    a, b = eval_batch(expr.lhs, clbits), eval_batch(expr.rhs, clbits)
    if isinstance(expr, And):
        return a & b
    if isinstance(expr, Or):
        return a | b
    return a ^ b


def _branch(ens: Ensemble, cdt: Conditional, n: int) -> Ensemble:
    mask = eval_batch(cdt.expr, ens.clbits)
    parts = []
    if mask.any():
        parts.append(_run(cdt.if_body, ens.take(mask), n))
    if (~mask).any():
        parts.append(_run(cdt.else_body, ens.take(~mask), n))
    return Ensemble.join(parts)


def classical_groups(ens: Ensemble) -> dict[tuple[bool, ...], tuple[float, np.ndarray]]:
    """Map each classical record to (probability, conditional density matrix)."""
    out = {}
    keys = [tuple(bool(b) for b in row) for row in ens.clbits]
    order = sorted(range(len(keys)), key=lambda i: keys[i])
    groups: dict[tuple, list[int]] = {}
    for i in order:
        groups.setdefault(keys[i], []).append(i)
    for key, idx in groups.items():
        st = ens.states[idx]
        p = ens.probs[idx]
        total = float(p.sum())
        rho = (st.T * p) @ st.conj() / total
        out[key] = (total, rho)
    return out


def equivalent(a: Circuit, b: Circuit, tol: float = 1e-9, *,
               initial_clbits: Sequence[bool] | None = None) -> bool:
    if a.num_qubits != b.num_qubits or a.num_clbits != b.num_clbits:
        raise ShapeMismatch(
            f"register shapes differ: ({a.num_qubits}, {a.num_clbits}) vs ({b.num_qubits}, {b.num_clbits})"
        )
    ga = classical_groups(simulate(a, initial_clbits=initial_clbits))
    gb = classical_groups(simulate(b, initial_clbits=initial_clbits))
    if ga.keys() != gb.keys():
        return False
    for key, (pa, ra) in ga.items():
        pb, rb = gb[key]
        if abs(pa - pb) > tol:
            return False
        if np.max(np.abs(ra - rb)) > tol:
            return False
    return True
