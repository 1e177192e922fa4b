"""Branch expansion and peephole optimization for dynamic quantum circuits."""

from .circuit import (
    And, Bit, Circuit, Conditional, Const, Gate, GateKind, Measure, Not, Or, Xor,
    concat, conditional_size, cx, h, if_else, measure, nesting_depth, program_size, s, validate, x, y, z,
)
from .dependency import SplitResult, depends_on, irreducible_split
from .expand import ExpandConfig, expand_once, rec_branch_expand
from .jsonio import from_json, to_json
from .pathmetrics import ExecutionPath, MetricsReport, enumerate_paths, metrics
from .peephole import optimize, optimize_pipeline
from .randgen import GenConfig, gen_pattern1, gen_pattern2, shor_qec_demo
from .simverify import Ensemble, equivalent, simulate

__all__ = [
    "And", "Bit", "Circuit", "Conditional", "Const", "Gate", "GateKind", "Measure", "Not", "Or", "Xor",
    "concat", "conditional_size", "cx", "h", "if_else", "measure", "nesting_depth", "program_size",
    "s", "validate", "x", "y", "z",
    "SplitResult", "depends_on", "irreducible_split",
    "ExpandConfig", "expand_once", "rec_branch_expand",
    "from_json", "to_json",
    "ExecutionPath", "MetricsReport", "enumerate_paths", "metrics",
    "optimize", "optimize_pipeline",
    "GenConfig", "gen_pattern1", "gen_pattern2", "shor_qec_demo",
    "Ensemble", "equivalent", "simulate",
]
