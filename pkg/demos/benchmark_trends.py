"""Baseline vs. expanded optimization on a small slice of the benchmarks.

Prints the mean percentage decrease per metric for the shallow pattern and
for the nested pattern at several depth limits. Use the ``experiment``
subcommand of the CLI for the full grid with CSV and SVG output.

Run: python demos/benchmark_trends.py
"""

from statistics import fmean

from dyncirc.harness import ExperimentConfig, run_experiment
from dyncirc.pathmetrics import METRIC_NAMES


def summarize(rows, depth_limits):
    print(f"{'metric':<18}" + "".join(f"dl={dl:<8}" for dl in depth_limits))
    for m in METRIC_NAMES:
        vals = [fmean(r.pct_decrease for r in rows if r.metric_name == m and r.depth_limit == dl)
                for dl in depth_limits]
        print(f"{m:<18}" + "".join(f"{v:<11.3f}" for v in vals))


def main():
    print("shallow pattern, k = 1..8, 10 seeds")
    rows = run_experiment(ExperimentConfig(pattern=1, k_values=range(1, 9), seeds_per_point=10, depth_limits=[0, 1, 2]))
    summarize(rows, [0, 1, 2])

    print("\nnested pattern (d=3), k = 1..4, 5 seeds")
    rows = run_experiment(ExperimentConfig(pattern=2, k_values=range(1, 5), seeds_per_point=5,
                                           depth_limits=[1, 2, 3], nesting_d=3))
    summarize(rows, [1, 2, 3])


if __name__ == "__main__":
    main()
