from __future__ import annotations

import pytest

from dyncirc import harness
from dyncirc.harness import ExperimentConfig, csv_text, means_from_raw, run_experiment, svg_text


def test_single_point_rows():
    rows = run_experiment(ExperimentConfig(k_values=[1], seeds_per_point=1, depth_limits=[1]))
    assert len(rows) == 4
    assert {r.metric_name for r in rows} == {"max_p_depth", "min_p_depth", "max_p_gate_count", "min_p_gate_count"}
    assert csv_text(rows).count("\n") == 5
    assert csv_text(rows).splitlines()[0] == "pattern,k,depth_limit,metric,baseline_mean,preprocessed_mean,pct_decrease"


def test_pct_decrease():
    assert harness.pct_decrease(10, 8) == pytest.approx(20.0)
    assert harness.pct_decrease(0, 0) == 0.0


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(k_values=[3, 1])
    with pytest.raises(ValueError):
        ExperimentConfig(seeds_per_point=0)
    with pytest.raises(ValueError):
        ExperimentConfig(pattern=3)


def test_deterministic_and_raw_means(tmp_path):
    cfg = ExperimentConfig(pattern=2, n=2, d_s=3, k_values=[1, 2], seeds_per_point=3, depth_limits=[1, 2], nesting_d=2)
    raw: list[dict] = []
    rows = run_experiment(cfg, raw=raw)
    assert csv_text(rows) == csv_text(run_experiment(cfg))
    means = means_from_raw(raw)
    for r in rows:
        assert means[(2, r.k, "baseline", None, r.metric_name)] == pytest.approx(r.baseline_mean)
        assert means[(2, r.k, "preprocessed", r.depth_limit, r.metric_name)] == pytest.approx(r.preprocessed_mean)
    path = harness.write_raw(raw, tmp_path / "raw.jsonl")
    assert len(path.read_text().splitlines()) == len(raw)


def test_rows_sorted():
    rows = run_experiment(ExperimentConfig(k_values=[1, 2], seeds_per_point=2, depth_limits=[0, 1]))
    keys = [(r.pattern, r.metric_name, r.k, r.depth_limit) for r in rows]
    assert keys == sorted(keys)


def test_svg_axis_spans_k(tmp_path):
    rows = [harness.ExperimentRow(1, k, 1, m, 10.0, 9.0, 10.0)
            for k in range(1, 21) for m in harness.FAMILIES["depth"]]
    svg = svg_text(rows, 1, "depth")
    assert svg.startswith("<svg") and 'width="800" height="500"' in svg
    assert ">1</text>" in svg and ">20</text>" in svg
    assert svg.count("<polyline") == 2
    with pytest.raises(ValueError):
        svg_text(rows, 1, "gate_count")
    paths = harness.plot_svg(rows + [harness.ExperimentRow(1, 1, 1, "max_p_gate_count", 1, 1, 0)], tmp_path)
    assert sorted(p.name for p in paths) == ["pattern1_depth.svg", "pattern1_gate_count.svg"]


def test_empty_rows():
    with pytest.raises(ValueError):
        csv_text([])
