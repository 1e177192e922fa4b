"""Classical dependency between a condition and the code before it.

Dependency is syntactic: an expression depends on a sub-circuit when the
sub-circuit writes (measures into) a classical bit the expression reads.
This over-approximates "can only be evaluated after running it", which is
the safe direction for moving code into branches.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

from .circuit import Circuit, CondExpr, Conditional, Instruction, Measure, reads
from .errors import NoDependency


@dataclass(frozen=True)
class SplitResult:
    """``prefix == c0 + c1``; the expression irreducibly depends on ``c0``
    and does not depend on ``c1``."""

    c0: Circuit
    c1: Circuit


def writes(instr: Instruction) -> frozenset[int]:
    if isinstance(instr, Measure):
        return frozenset((instr.clbit,))
    if isinstance(instr, Conditional):
        return reduce(frozenset.union, map(writes, instr.if_body + instr.else_body), frozenset())
    return frozenset()


def _seq(sub: Circuit | Sequence[Instruction]) -> Sequence[Instruction]:
    return sub.instrs if isinstance(sub, Circuit) else sub


def depends_on(expr: CondExpr, sub: Circuit | Sequence[Instruction]) -> bool:
    r = reads(expr)
    return bool(r) and any(r & writes(i) for i in _seq(sub))


def split_index(prefix: Sequence[Instruction], expr: CondExpr) -> int:
    """Length of the irreducible part: one past the last instruction writing a read bit.

    Returns 0 when nothing in ``prefix`` writes a bit ``expr`` reads.
    """
    r = reads(expr)
    for i in range(len(prefix) - 1, -1, -1):
        if r & writes(prefix[i]):
            return i + 1
    return 0


def irreducible_split(prefix: Circuit, expr: CondExpr) -> SplitResult:
    cut = split_index(prefix.instrs, expr)
    if cut == 0:
        raise NoDependency(f"expression reads {sorted(reads(expr))}, which the prefix never writes")
    return SplitResult(prefix.with_instrs(prefix.instrs[:cut]), prefix.with_instrs(prefix.instrs[cut:]))
