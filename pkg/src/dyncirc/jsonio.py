"""``dyncirc-v1`` JSON interchange format.

Top level::

    {"version": "dyncirc-v1", "num_qubits": 2, "num_clbits": 1, "instrs": [...]}

Instructions are discriminated by ``kind``::

    {"kind": "gate", "g": "CX", "q": [0, 1]}
    {"kind": "measure", "q": 0, "c": 0}
    {"kind": "cond", "expr": <expr>, "if": [...], "else": [...]}

Expressions are discriminated by ``op``::

    {"op": "bit", "c": 0}          {"op": "const", "value": true}
    {"op": "not", "arg": <expr>}   {"op": "and" | "or" | "xor", "lhs": <expr>, "rhs": <expr>}
"""

from __future__ import annotations

import json

from .circuit import (
    And, Bit, Circuit, CondExpr, Conditional, Const, Gate, GateKind, Instruction,
    Measure, Not, Or, Xor, validate,
)
from .errors import ParseError, SchemaVersionMismatch, ValidationError

VERSION = "dyncirc-v1"

_BINOPS = {"and": And, "or": Or, "xor": Xor}
_BINOP_NAMES = {v: k for k, v in _BINOPS.items()}


def to_dict(c: Circuit) -> dict:
    return {
        "version": VERSION,
        "num_qubits": c.num_qubits,
        "num_clbits": c.num_clbits,
        "instrs": [_instr_to_obj(i) for i in c.instrs],
    }


def to_json(c: Circuit, *, indent: int | None = None) -> str:
    validate(c)
    return json.dumps(to_dict(c), indent=indent, ensure_ascii=False)


def _instr_to_obj(ins: Instruction) -> dict:
    if isinstance(ins, Gate):
        return {"kind": "gate", "g": ins.kind.value, "q": list(ins.qubits)}
    if isinstance(ins, Measure):
        return {"kind": "measure", "q": ins.qubit, "c": ins.clbit}
    return {
        "kind": "cond",
        "expr": _expr_to_obj(ins.expr),
        "if": [_instr_to_obj(i) for i in ins.if_body],
        "else": [_instr_to_obj(i) for i in ins.else_body],
    }


def _expr_to_obj(e: CondExpr) -> dict:
    if isinstance(e, Bit):
        return {"op": "bit", "c": e.index}
    if isinstance(e, Const):
        return {"op": "const", "value": bool(e.value)}
    if isinstance(e, Not):
        return {"op": "not", "arg": _expr_to_obj(e.arg)}
    return {"op": _BINOP_NAMES[type(e)], "lhs": _expr_to_obj(e.lhs), "rhs": _expr_to_obj(e.rhs)}


def from_json(text: str | bytes) -> Circuit:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, exc.msg) from None
    return from_dict(doc)


def from_dict(doc) -> Circuit:
    if not isinstance(doc, dict):
        raise ParseError("/", "top level must be an object")
    if "version" not in doc:
        raise ParseError("/version", "missing")
    if doc["version"] != VERSION:
        raise SchemaVersionMismatch(f"expected {VERSION!r}, got {doc['version']!r}")
    nq = _int(doc, "num_qubits", "/")
    nc = _int(doc, "num_clbits", "/")
    instrs = _instr_list(doc.get("instrs"), "/instrs")
    c = Circuit(nq, nc, instrs)
    try:
        validate(c)
    except ValidationError as exc:
        raise ParseError("/instrs" + _loc(exc.location), str(exc)) from None
    return c


def _loc(location: tuple) -> str:
    return "".join(f"/{p}" for p in location)


def _int(obj: dict, key: str, path: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{path.rstrip('/')}/{key}", "expected integer")
    return v


def _instr_list(items, path: str) -> tuple[Instruction, ...]:
    if not isinstance(items, list):
        raise ParseError(path, "expected array")
    return tuple(_instr(o, f"{path}/{i}") for i, o in enumerate(items))


def _instr(o, path: str) -> Instruction:
    if not isinstance(o, dict):
        raise ParseError(path, "expected object")
    kind = o.get("kind")
    if kind == "gate":
        g = o.get("g")
        try:
            gk = GateKind(g)
        except ValueError:
            raise ParseError(f"{path}/g", f"unknown gate kind {g!r}") from None
        q = o.get("q")
        if not isinstance(q, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in q):
            raise ParseError(f"{path}/q", "expected array of integers")
        return Gate(gk, tuple(q))
    if kind == "measure":
        return Measure(_int(o, "q", path), _int(o, "c", path))
    if kind == "cond":
        return Conditional(
            _expr(o.get("expr"), f"{path}/expr"),
            _instr_list(o.get("if"), f"{path}/if"),
            _instr_list(o.get("else", []), f"{path}/else"),
        )
    raise ParseError(f"{path}/kind", f"unknown instruction kind {kind!r}")


def _expr(o, path: str) -> CondExpr:
    if not isinstance(o, dict):
        raise ParseError(path, "expected expression object")
    op = o.get("op")
    if op == "bit":
        return Bit(_int(o, "c", path))
    if op == "const":
        v = o.get("value")
        if not isinstance(v, bool):
            raise ParseError(f"{path}/value", "expected boolean")
        return Const(v)
    if op == "not":
        return Not(_expr(o.get("arg"), f"{path}/arg"))
    if op in _BINOPS:
        return _BINOPS[op](_expr(o.get("lhs"), f"{path}/lhs"), _expr(o.get("rhs"), f"{path}/rhs"))
    raise ParseError(f"{path}/op", f"unknown expression op {op!r}")
