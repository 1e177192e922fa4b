"""Baseline vs. expanded optimization on the 9-qubit correction demo."""

from __future__ import annotations

from .circuit import Circuit
from .pathmetrics import path_gate_count, replay
from .peephole import optimize, optimize_pipeline
from .randgen import shor_qec_demo
from .simverify import equivalent


def branch_counts(c: Circuit) -> dict[str, int]:
    """Gate count of the correction-applied and no-correction paths.

    Assumes the demo's shape: one conditional on every path.
    """
    return {
        "if": path_gate_count(replay(c, [True])),
        "else": path_gate_count(replay(c, [False])),
    }


def qec_report(j: int = 4, depth_limit: int = 1) -> dict:
    c = shor_qec_demo(j)
    base = optimize(c)
    piped = optimize_pipeline(c, depth_limit)
    b, p = branch_counts(base), branch_counts(piped)
    verified = equivalent(c, piped, 1e-9)
    return {
        "j": j,
        "baseline": b,
        "pipeline": p,
        "if_reduction": b["if"] - p["if"],
        "else_reduction": b["else"] - p["else"],
        "verified": verified,
        "passed": verified and b["if"] - p["if"] == 2 and b["else"] == p["else"],
    }
