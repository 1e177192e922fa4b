"""Exception types raised across the package."""

from __future__ import annotations


class DynCircError(Exception):
    """Base class for every error raised by dyncirc."""


class ValidationError(DynCircError, ValueError):
    """A circuit violates a structural invariant.

    ``location`` is a tuple path into the instruction tree, e.g.
    ``(3, "if", 0)`` for the first instruction of the if-body of the
    fourth top-level instruction.
    """

    def __init__(self, location: tuple, message: str):
        self.location = tuple(location)
        super().__init__(f"{message} at {_fmt_location(self.location)}")


class IndexOutOfRange(ValidationError):
    pass


class ArityMismatch(ValidationError):
    pass


class DuplicateQubit(ValidationError):
    pass


class ParseError(DynCircError, ValueError):
    def __init__(self, position, reason: str):
        self.position = position
        self.reason = reason
        super().__init__(f"parse error at {position}: {reason}")


class SchemaVersionMismatch(DynCircError, ValueError):
    pass


class NoDependency(DynCircError, ValueError):
    """irreducible_split was called on a prefix the expression does not read."""


class DependencyViolation(DynCircError, ValueError):
    """Code moved into a conditional writes a bit its condition reads."""


class PathExplosion(DynCircError, RuntimeError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} conditionals on a path exceeds enumeration cap {cap}")


class QubitCapExceeded(DynCircError, ValueError):
    pass


class ShapeMismatch(DynCircError, ValueError):
    pass


def _fmt_location(loc: tuple) -> str:
    return "/" + "/".join(str(p) for p in loc) if loc else "<root>"
