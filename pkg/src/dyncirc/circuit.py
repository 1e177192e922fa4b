"""Dynamic-circuit IR: gates, measurements, classical conditionals.

A :class:`Circuit` owns the qubit and classical-bit registers. Conditional
bodies are plain instruction tuples that share the enclosing circuit's index
space, so every index in a body is checked against the same bounds.

Instructions are stored in execution order: ``instrs[0]`` runs first.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .errors import ArityMismatch, DuplicateQubit, IndexOutOfRange


class GateKind(str, Enum):
    X = "X"
    Y = "Y"
    Z = "Z"
    S = "S"
    H = "H"
    CX = "CX"

    @property
    def arity(self) -> int:
        return 2 if self is GateKind.CX else 1


# --- classical condition expressions -------------------------------------


@dataclass(frozen=True, slots=True)
class Bit:
    index: int


@dataclass(frozen=True, slots=True)
class Not:
    arg: CondExpr


@dataclass(frozen=True, slots=True)
class And:
    lhs: CondExpr
    rhs: CondExpr


@dataclass(frozen=True, slots=True)
class Or:
    lhs: CondExpr
    rhs: CondExpr


@dataclass(frozen=True, slots=True)
class Xor:
    lhs: CondExpr
    rhs: CondExpr


@dataclass(frozen=True, slots=True)
class Const:
    value: bool


CondExpr = Union[Bit, Not, And, Or, Xor, Const]


def reads(expr: CondExpr) -> frozenset[int]:
    """Classical bits an expression reads."""
    if isinstance(expr, Bit):
        return frozenset((expr.index,))
    if isinstance(expr, Const):
        return frozenset()
    if isinstance(expr, Not):
        return reads(expr.arg)
    return reads(expr.lhs) | reads(expr.rhs)


def evaluate(expr: CondExpr, clbits: Sequence[bool]) -> bool:
    if isinstance(expr, Bit):
        return bool(clbits[expr.index])
    if isinstance(expr, Const):
        return bool(expr.value)
    if isinstance(expr, Not):
        return not evaluate(expr.arg, clbits)
    a = evaluate(expr.lhs, clbits)
    b = evaluate(expr.rhs, clbits)
    if isinstance(expr, And):
        return a and b
    if isinstance(expr, Or):
        return a or b
    return a != b


# --- instructions ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Gate:
    kind: GateKind
    qubits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "qubits", tuple(self.qubits))

    def __repr__(self) -> str:
        return f"{self.kind.value}({', '.join(map(str, self.qubits))})"


@dataclass(frozen=True, slots=True)
class Measure:
    qubit: int
    clbit: int

    def __repr__(self) -> str:
        return f"Measure({self.qubit}->{self.clbit})"


@dataclass(frozen=True, slots=True)
class Conditional:
    """``if expr: if_body else: else_body``. An absent else is ``()``."""

    expr: CondExpr
    if_body: tuple[Instruction, ...]
    else_body: tuple[Instruction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "if_body", tuple(self.if_body))
        object.__setattr__(self, "else_body", tuple(self.else_body))


Instruction = Union[Gate, Measure, Conditional]


@dataclass(frozen=True, slots=True)
class Circuit:
    num_qubits: int
    num_clbits: int = 0
    instrs: tuple[Instruction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "instrs", tuple(self.instrs))

    def __len__(self) -> int:
        return len(self.instrs)

    def __iter__(self) -> Iterator[Instruction]:
        return iter(self.instrs)

    def with_instrs(self, instrs: Sequence[Instruction]) -> Circuit:
        """Same registers, different instruction list."""
        return Circuit(self.num_qubits, self.num_clbits, tuple(instrs))

    def __add__(self, other: Circuit) -> Circuit:
        return concat(self, other)


def concat(a: Circuit, b: Circuit) -> Circuit:
    """``a`` then ``b``. Registers are widened to cover both."""
    return Circuit(
        max(a.num_qubits, b.num_qubits),
        max(a.num_clbits, b.num_clbits),
        a.instrs + b.instrs,
    )


# shorthand constructors, used heavily in tests and demos
def x(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def y(q: int) -> Gate:
    return Gate(GateKind.Y, (q,))


def z(q: int) -> Gate:
    return Gate(GateKind.Z, (q,))


def s(q: int) -> Gate:
    return Gate(GateKind.S, (q,))


def h(q: int) -> Gate:
    return Gate(GateKind.H, (q,))


def cx(control: int, target: int) -> Gate:
    return Gate(GateKind.CX, (control, target))


def measure(qubit: int, clbit: int) -> Measure:
    return Measure(qubit, clbit)


def if_else(expr: CondExpr | int, if_body: Sequence[Instruction],
            else_body: Sequence[Instruction] = ()) -> Conditional:
    """Build a conditional; a bare int is read as ``Bit(int)``."""
    if isinstance(expr, int):
        expr = Bit(expr)
    return Conditional(expr, tuple(if_body), tuple(else_body))


# --- validation --------------------------------------------------------------


def validate(c: Circuit) -> None:
    """Raise a :class:`~dyncirc.errors.ValidationError` subclass if ``c`` is malformed."""
    if c.num_qubits < 0 or c.num_clbits < 0:
        raise IndexOutOfRange((), "negative register size")
    _validate_block(c.instrs, c.num_qubits, c.num_clbits, ())


def _validate_block(instrs, nq, nc, path):
    for i, ins in enumerate(instrs):
        loc = path + (i,)
        if isinstance(ins, Gate):
            if len(ins.qubits) != ins.kind.arity:
                raise ArityMismatch(loc, f"{ins.kind.value} takes {ins.kind.arity} qubit(s), got {len(ins.qubits)}")
            for q in ins.qubits:
                if not 0 <= q < nq:
                    raise IndexOutOfRange(loc, f"qubit {q} outside 0..{nq - 1}")
            if len(set(ins.qubits)) != len(ins.qubits):
                raise DuplicateQubit(loc, f"repeated qubit in {ins!r}")
        elif isinstance(ins, Measure):
            if not 0 <= ins.qubit < nq:
                raise IndexOutOfRange(loc, f"qubit {ins.qubit} outside 0..{nq - 1}")
            if not 0 <= ins.clbit < nc:
                raise IndexOutOfRange(loc, f"clbit {ins.clbit} outside 0..{nc - 1}")
        elif isinstance(ins, Conditional):
            for b in reads(ins.expr):
                if not 0 <= b < nc:
                    raise IndexOutOfRange(loc + ("expr",), f"clbit {b} outside 0..{nc - 1}")
            _validate_block(ins.if_body, nq, nc, loc + ("if",))
            _validate_block(ins.else_body, nq, nc, loc + ("else",))
        else:
            raise TypeError(f"not an instruction: {ins!r} at {loc}")


# --- structural measures ----------------------------------------------------


def _instrs(c: Circuit | Sequence[Instruction]) -> Sequence[Instruction]:
    return c.instrs if isinstance(c, Circuit) else c


def iter_conditionals(c: Circuit | Sequence[Instruction]) -> Iterator[Conditional]:
    """Every conditional, at any nesting level, in pre-order."""
    for ins in _instrs(c):
        if isinstance(ins, Conditional):
            yield ins
            yield from iter_conditionals(ins.if_body)
            yield from iter_conditionals(ins.else_body)


def count_conditionals(c: Circuit | Sequence[Instruction]) -> int:
    return sum(1 for _ in iter_conditionals(c))


def _block_depth(instrs: Sequence[Instruction]) -> int:
    return max((nesting_depth(i) for i in instrs if isinstance(i, Conditional)), default=0)


def nesting_depth(cdt: Conditional) -> int:
    """1 for conditional-free bodies, else one more than the deepest inner conditional."""
    if not isinstance(cdt, Conditional):
        raise TypeError("nesting_depth expects a Conditional")
    return 1 + max(_block_depth(cdt.if_body), _block_depth(cdt.else_body))


def conditional_size(cdt: Conditional) -> int:
    return 2 ** nesting_depth(cdt)


def program_size(c: Circuit | Sequence[Instruction], *, allocation: bool = True) -> int:
    """Number of instructions, counting each condition test as one.

    A :class:`Circuit` is a whole program and its register allocation counts
    as one instruction as well; a bare instruction sequence (a sub-program,
    e.g. a branch body) has no allocation. Pass ``allocation=False`` to get
    the allocation-free count of a circuit.
    """
    n = _block_size(_instrs(c))
    if isinstance(c, Circuit) and allocation:
        n += 1
    return n


def _block_size(instrs: Sequence[Instruction]) -> int:
    n = 0
    for ins in instrs:
        if isinstance(ins, Conditional):
            n += 1 + _block_size(ins.if_body) + _block_size(ins.else_body)
        else:
            n += 1
    return n


def qubits_of(ins: Instruction, num_qubits: int) -> tuple[int, ...]:
    """Qubits an instruction occupies; a conditional conservatively occupies all."""
    if isinstance(ins, Gate):
        return ins.qubits
    if isinstance(ins, Measure):
        return (ins.qubit,)
    return tuple(range(num_qubits))
