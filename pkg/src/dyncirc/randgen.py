"""Seeded benchmark circuits: shallow pattern, nested pattern, QEC demo.

Randomness
----------
Every random sub-circuit draws from its own ``numpy.random.Generator``
(PCG64) seeded by ``SeedSequence(seed, spawn_key=(block, role, *path))``.
``block`` is the 0-based block index, ``role`` is one of :data:`ROLE_PRE`,
:data:`ROLE_IF`, :data:`ROLE_ELSE`, and ``path`` lists the branch choices
(1 = if, 0 = else) leading to a nested sub-circuit. Streams never depend on
``k`` or on other blocks, so the first blocks of a k+1 block circuit equal
the k block circuit.

Per layer, :func:`random_subcircuit` draws ``rng.permutation(n)``, then
``rng.random()``; if that is below ``p_cx`` (and n >= 2) the first two
permuted qubits get ``CX(first, second)``. Each remaining qubit, in permuted
order, gets ``rng.integers(6)`` indexing ``X, Y, Z, S, H, skip``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Bit, Circuit, Conditional, Gate, GateKind, Instruction, Measure, h, x

ROLE_PRE, ROLE_IF, ROLE_ELSE = 0, 1, 2
_CHOICES = (GateKind.X, GateKind.Y, GateKind.Z, GateKind.S, GateKind.H, None)


@dataclass(frozen=True)
class GenConfig:
    n: int = 3
    d_s: int = 5
    k: int = 1
    d: int = 1
    seed: int = 0
    p_cx: float = 0.3

    def __post_init__(self):
        if self.n < 1 or self.d_s < 1 or self.k < 1 or self.d < 1:
            raise ValueError(f"n, d_s, k, d must all be >= 1: {self}")
        if not 0.0 <= self.p_cx <= 1.0:
            raise ValueError(f"p_cx must lie in [0, 1], got {self.p_cx}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def stream(seed: int, block: int, role: int, path: tuple[int, ...] = ()) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block, role, *path))))


def random_subcircuit(n: int, depth: int, rng: np.random.Generator, p_cx: float = 0.3) -> tuple[Instruction, ...]:
    """``depth`` random layers of Clifford gates on ``n`` qubits."""
    if n < 1 or depth < 1:
        raise ValueError("n and depth must be >= 1")
    out: list[Instruction] = []
    for _ in range(depth):
        perm = [int(q) for q in rng.permutation(n)]
        if rng.random() < p_cx and n >= 2:
            out.append(Gate(GateKind.CX, (perm[0], perm[1])))
            perm = perm[2:]
        for q in perm:
            kind = _CHOICES[int(rng.integers(6))]
            if kind is not None:
                out.append(Gate(kind, (q,)))
    return tuple(out)


def _pre_block(cfg: GenConfig, rng: np.random.Generator, clbit: int) -> tuple[Instruction, ...]:
    body = random_subcircuit(cfg.n, cfg.d_s, rng, cfg.p_cx)
    return body + (Measure(int(rng.integers(cfg.n)), clbit),)


def gen_pattern1(cfg: GenConfig) -> Circuit:
    """k blocks of ``C_i; measure -> m_i; if m_i {C_ai} else {C_bi}``."""
    instrs: list[Instruction] = []
    for i in range(cfg.k):
        instrs.extend(_pre_block(cfg, stream(cfg.seed, i, ROLE_PRE), i))
        instrs.append(Conditional(
            Bit(i),
            random_subcircuit(cfg.n, cfg.d_s, stream(cfg.seed, i, ROLE_IF), cfg.p_cx),
            random_subcircuit(cfg.n, cfg.d_s, stream(cfg.seed, i, ROLE_ELSE), cfg.p_cx),
        ))
    return Circuit(cfg.n, cfg.k, tuple(instrs))


def nested_block(cfg: GenConfig, block: int, depth: int, clbit_base: int,
                 path: tuple[int, ...] = (), leaf_bodies: bool = True) -> tuple[tuple[Instruction, ...], int]:
    """``R[depth]`` for one block; returns (instructions, clbits used).

    ``R[0]`` is empty. With ``leaf_bodies`` the innermost conditional gets
    two random sub-circuits instead of empty bodies, so that depth 1 is the
    shallow pattern's block.
    """
    if depth == 0:
        return (), 0
    pre = _pre_block(cfg, stream(cfg.seed, block, ROLE_PRE, path), clbit_base)
    used = 1
    if depth == 1 and leaf_bodies:
        ib = random_subcircuit(cfg.n, cfg.d_s, stream(cfg.seed, block, ROLE_IF, path), cfg.p_cx)
        eb = random_subcircuit(cfg.n, cfg.d_s, stream(cfg.seed, block, ROLE_ELSE, path), cfg.p_cx)
    else:
        # the two inner copies are disjoint in time, so they may reuse clbits
        ib, ui = nested_block(cfg, block, depth - 1, clbit_base + 1, path + (1,), leaf_bodies)
        eb, ue = nested_block(cfg, block, depth - 1, clbit_base + 1, path + (0,), leaf_bodies)
        used += max(ui, ue)
    return pre + (Conditional(Bit(clbit_base), ib, eb),), used


def gen_pattern2(cfg: GenConfig, *, leaf_bodies: bool = True) -> Circuit:
    """k blocks of the recursively nested pattern with nesting depth ``cfg.d``."""
    instrs: list[Instruction] = []
    base = 0
    for i in range(cfg.k):
        blk, used = nested_block(cfg, i, cfg.d, base, (), leaf_bodies)
        instrs.extend(blk)
        base += used
    return Circuit(cfg.n, base, tuple(instrs))


def shor_qec_demo(j: int = 4) -> Circuit:
    """Two blocks of a 9-qubit code with a stand-in syndrome measurement.

    Block 1 applies a placeholder logical operation (H on every qubit),
    measures qubit 0 into the syndrome bit and conditionally corrects with
    ``X(j)``. Block 2 is a logical Z, realized as X on all nine qubits.
    Once the block-2 gates sit inside the correction branch, the two
    ``X(j)`` cancel.
    """
    if not 0 <= j < 9:
        raise ValueError("j must address one of the 9 data qubits")
    logical_1 = tuple(h(q) for q in range(9))
    syndrome = (Measure(0, 0),)
    correction = (Conditional(Bit(0), (x(j),), ()),)
    logical_z = tuple(x(q) for q in range(9))
    return Circuit(9, 1, logical_1 + syndrome + correction + logical_z)
