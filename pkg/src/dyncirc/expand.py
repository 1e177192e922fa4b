"""Branch expansion: push condition-independent code into both branches.

For a conditional ``cdt`` preceded by ``c0 + c1`` and followed by ``c2``,
where the condition irreducibly depends on ``c0`` and not at all on ``c1``::

    c0; c1; if E {Ci} else {Ce}; c2
      ==  c0; if E {c1; Ci; c2} else {c1; Ce; c2}

:func:`rec_branch_expand` applies this to the leftmost conditional of a
block, which swallows everything after it, then recurses into both new
bodies while the depth budget lasts. Outer conditionals are expanded before
inner ones so inner ones see the largest possible surrounding code.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .circuit import Circuit, Conditional, Instruction, validate
from .dependency import depends_on, split_index
from .errors import DependencyViolation

Block = tuple[Instruction, ...]
ExpandHook = Callable[[Block, Block], None]


@dataclass(frozen=True)
class ExpandConfig:
    depth_limit: int = 1

    def __post_init__(self):
        if not isinstance(self.depth_limit, int) or self.depth_limit < 0:
            raise ValueError(f"depth_limit must be a non-negative int, got {self.depth_limit!r}")


def expand_once(c0: Circuit, c1: Circuit, cdt: Conditional, c2: Circuit) -> Circuit:
    """Single branch expansion of ``c0; c1; cdt; c2``.

    ``c1`` must not write any bit ``cdt.expr`` reads. The result is ``c0``
    followed by one conditional with ``c1`` and ``c2`` copied into both bodies.
    """
    if depends_on(cdt.expr, c1):
        raise DependencyViolation("c1 writes a classical bit read by the condition")
    nq = max(c.num_qubits for c in (c0, c1, c2))
    nc = max(c.num_clbits for c in (c0, c1, c2))
    return Circuit(nq, nc, c0.instrs + (_absorb(cdt, c1.instrs, c2.instrs),))


def _absorb(cdt: Conditional, before: Block, after: Block) -> Conditional:
    return Conditional(cdt.expr, before + cdt.if_body + after, before + cdt.else_body + after)


def rec_branch_expand(c: Circuit, cfg: ExpandConfig | int = 1, *,
                      on_expand: ExpandHook | None = None) -> Circuit:
    """Recursive maximum branch expansion.

    ``cfg.depth_limit`` bounds how many levels below the current one are
    expanded; 0 still expands the leftmost top-level conditional but does
    not recurse into its bodies.

    ``on_expand(before, after)`` is called with the instruction block of
    every individual expansion step, before recursion into the new bodies.
    """
    if isinstance(cfg, int):
        cfg = ExpandConfig(cfg)
    validate(c)
    return c.with_instrs(_expand_block(c.instrs, cfg.depth_limit, on_expand))


def _expand_block(instrs: Sequence[Instruction], d: int, hook: ExpandHook | None) -> Block:
    instrs = tuple(instrs)
    for i, ins in enumerate(instrs):
        if isinstance(ins, Conditional):
            break
    else:
        return instrs

    cdt = instrs[i]
    prefix, suffix = instrs[:i], instrs[i + 1:]
    # cut == 0 when the condition does not depend on the prefix at all
    cut = split_index(prefix, cdt.expr)
    kept, moved = prefix[:cut], prefix[cut:]
    new = _absorb(cdt, moved, suffix)
    if hook is not None:
        hook(instrs, kept + (new,))
    if d > 0:
        new = Conditional(
            new.expr,
            _expand_block(new.if_body, d - 1, hook),
            _expand_block(new.else_body, d - 1, hook),
        )
    return kept + (new,)
