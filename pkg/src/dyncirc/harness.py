"""Baseline vs. preprocessed optimization over random circuit families.

For every block count ``k`` and seed, the generated circuit is optimized
directly (baseline) and after branch expansion at each requested depth
limit (preprocessed). The four path metrics are averaged over seeds, then
turned into a percentage decrease relative to the baseline mean.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from statistics import fmean

from .expand import rec_branch_expand
from .pathmetrics import METRIC_NAMES, metrics
from .peephole import optimize
from .randgen import GenConfig, gen_pattern1, gen_pattern2

log = logging.getLogger(__name__)

CSV_HEADER = ("pattern", "k", "depth_limit", "metric", "baseline_mean", "preprocessed_mean", "pct_decrease")
FAMILIES = {
    "depth": ("max_p_depth", "min_p_depth"),
    "gate_count": ("max_p_gate_count", "min_p_gate_count"),
}


@dataclass(frozen=True)
class ExperimentConfig:
    pattern: int = 1
    n: int = 3
    d_s: int = 5
    k_values: tuple[int, ...] = tuple(range(1, 21))
    seeds_per_point: int = 25
    depth_limits: tuple[int, ...] = (1,)
    nesting_d: int = 4
    output_dir: Path | None = None
    p_cx: float = 0.3
    seed_base: int = 0

    def __post_init__(self):
        object.__setattr__(self, "k_values", tuple(self.k_values))
        object.__setattr__(self, "depth_limits", tuple(self.depth_limits))
        if self.pattern not in (1, 2):
            raise ValueError("pattern must be 1 or 2")
        if not self.k_values or list(self.k_values) != sorted(set(self.k_values)):
            raise ValueError("k_values must be nonempty and strictly ascending")
        if self.seeds_per_point < 1:
            raise ValueError("seeds_per_point must be >= 1")
        if not self.depth_limits or min(self.depth_limits) < 0:
            raise ValueError("depth_limits must be nonempty and non-negative")


@dataclass(frozen=True)
class ExperimentRow:
    pattern: int
    k: int
    depth_limit: int
    metric_name: str
    baseline_mean: float
    preprocessed_mean: float
    pct_decrease: float


def pct_decrease(baseline: float, preprocessed: float) -> float:
    if baseline <= 0:
        return 0.0
    return 100.0 * (baseline - preprocessed) / baseline


def generate(cfg: ExperimentConfig, k: int, seed: int):
    g = GenConfig(n=cfg.n, d_s=cfg.d_s, k=k, d=cfg.nesting_d, seed=seed, p_cx=cfg.p_cx)
    return gen_pattern1(g) if cfg.pattern == 1 else gen_pattern2(g)


def run_experiment(cfg: ExperimentConfig, *, raw: list[dict] | None = None) -> list[ExperimentRow]:
    """Run every (k, seed, depth_limit) item and aggregate.

    If ``raw`` is given, one record per (k, seed, variant) is appended to it
    with the four metric values, so the means can be recomputed.
    """
    rows: list[ExperimentRow] = []
    for k in cfg.k_values:
        t0 = time.perf_counter()
        base: dict[str, list[int]] = {m: [] for m in METRIC_NAMES}
        pre: dict[int, dict[str, list[int]]] = {dl: {m: [] for m in METRIC_NAMES} for dl in cfg.depth_limits}
        for s in range(cfg.seeds_per_point):
            seed = cfg.seed_base + s
            try:
                c = generate(cfg, k, seed)
                rep = metrics(optimize(c)).as_dict()
                _record(raw, cfg.pattern, k, seed, None, rep)
                for m in METRIC_NAMES:
                    base[m].append(rep[m])
                for dl in cfg.depth_limits:
                    rep = metrics(optimize(rec_branch_expand(c, dl))).as_dict()
                    _record(raw, cfg.pattern, k, seed, dl, rep)
                    for m in METRIC_NAMES:
                        pre[dl][m].append(rep[m])
            except Exception as exc:
                raise RuntimeError(f"experiment failed at k={k}, seed={seed}: {exc}") from exc
        for dl in cfg.depth_limits:
            for m in METRIC_NAMES:
                b, p = fmean(base[m]), fmean(pre[dl][m])
                rows.append(ExperimentRow(cfg.pattern, k, dl, m, b, p, pct_decrease(b, p)))
        log.info("pattern %d k=%d: %d seeds in %.2fs", cfg.pattern, k, cfg.seeds_per_point,
                 time.perf_counter() - t0)
    rows.sort(key=lambda r: (r.pattern, r.metric_name, r.k, r.depth_limit))
    return rows


def _record(raw, pattern, k, seed, depth_limit, rep):
    if raw is not None:
        raw.append({"pattern": pattern, "k": k, "seed": seed,
                    "variant": "baseline" if depth_limit is None else "preprocessed",
                    "depth_limit": depth_limit, **{m: rep[m] for m in METRIC_NAMES}})


def csv_text(rows: list[ExperimentRow]) -> str:
    if not rows:
        raise ValueError("no rows to write")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.pattern, r.k, r.depth_limit, r.metric_name,
                    f"{r.baseline_mean:.6f}", f"{r.preprocessed_mean:.6f}", f"{r.pct_decrease:.6f}"])
    return buf.getvalue()


def write_csv(rows: list[ExperimentRow], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(csv_text(rows), encoding="utf-8")
    return path


def write_raw(records: list[dict], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return path


def means_from_raw(records: list[dict]) -> dict[tuple, float]:
    """(pattern, k, variant, depth_limit, metric) -> mean, recomputed from a raw dump."""
    acc: dict[tuple, list[float]] = {}
    for rec in records:
        for m in METRIC_NAMES:
            key = (rec["pattern"], rec["k"], rec["variant"], rec["depth_limit"], m)
            acc.setdefault(key, []).append(rec[m])
    return {key: fmean(v) for key, v in acc.items()}


# --- SVG ----------------------------------------------------------------------

_W, _H = 800, 500
_ML, _MR, _MT, _MB = 70, 200, 40, 60
_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def svg_text(rows: list[ExperimentRow], pattern: int, family: str) -> str:
    """Percentage decrease vs. k, one polyline per (metric, depth_limit)."""
    sel = [r for r in rows if r.pattern == pattern and r.metric_name in FAMILIES[family]]
    if not sel:
        raise ValueError(f"no rows for pattern {pattern}, family {family}")
    ks = sorted({r.k for r in sel})
    kmin, kmax = ks[0], ks[-1]
    ys = [r.pct_decrease for r in sel]
    ymin, ymax = min(0.0, min(ys)), max(ys)
    if ymax - ymin < 1e-9:
        ymax = ymin + 1.0
    pad = 0.05 * (ymax - ymin)
    ymin, ymax = ymin - pad, ymax + pad
    pw, ph = _W - _ML - _MR, _H - _MT - _MB

    def px(k):
        return _ML + (pw * (k - kmin) / (kmax - kmin) if kmax > kmin else pw / 2)

    def py(v):
        return _MT + ph * (ymax - v) / (ymax - ymin)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">'
        f'Pattern {pattern}: percentage decrease in {family.replace("_", " ")} metrics</text>',
        f'<line x1="{_ML}" y1="{_MT + ph}" x2="{_ML + pw}" y2="{_MT + ph}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_MT + ph}" stroke="black"/>',
    ]
    for k in _k_ticks(kmin, kmax):
        out.append(f'<line x1="{px(k):.2f}" y1="{_MT + ph}" x2="{px(k):.2f}" y2="{_MT + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{px(k):.2f}" y="{_MT + ph + 20}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="12">{k}</text>')
    for v in _ticks(ymin, ymax):
        out.append(f'<line x1="{_ML - 5}" y1="{py(v):.2f}" x2="{_ML}" y2="{py(v):.2f}" stroke="black"/>')
        out.append(f'<text x="{_ML - 8}" y="{py(v) + 4:.2f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="12">{v:g}</text>')
    if ymin < 0 < ymax:
        out.append(f'<line x1="{_ML}" y1="{py(0):.2f}" x2="{_ML + pw}" y2="{py(0):.2f}" '
                   f'stroke="#999" stroke-dasharray="4 3"/>')
    out.append(f'<text x="{_ML + pw / 2:.1f}" y="{_H - 15}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13">Number of blocks k</text>')
    out.append(f'<text x="18" y="{_MT + ph / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="13" transform="rotate(-90 18 {_MT + ph / 2:.1f})">Percentage decrease</text>')

    series = sorted({(r.metric_name, r.depth_limit) for r in sel})
    for i, (m, dl) in enumerate(series):
        color = _COLORS[i % len(_COLORS)]
        pts = sorted((r.k, r.pct_decrease) for r in sel if r.metric_name == m and r.depth_limit == dl)
        coords = " ".join(f"{px(k):.2f},{py(v):.2f}" for k, v in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{coords}"/>')
        ly = _MT + 10 + 20 * i
        out.append(f'<line x1="{_W - _MR + 15}" y1="{ly}" x2="{_W - _MR + 40}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{_W - _MR + 45}" y="{ly + 4}" font-family="sans-serif" font-size="12">'
                   f'{m} (dl={dl})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ticks(lo: float, hi: float, integer: bool = False, target: int = 6) -> list[float]:
    span = hi - lo
    raw = span / target if span > 0 else 1.0
    mag = 10 ** int(f"{raw:e}".split("e")[1])
    step = next(m * mag for m in (1, 2, 5, 10) if m * mag >= raw)
    if integer:
        step = max(1, round(step))
    start = -(-lo // step) * step
    ticks = []
    v = start
    while v <= hi + 1e-9:
        ticks.append(round(v, 10))
        v += step
    return ticks


def _k_ticks(kmin: int, kmax: int) -> list[int]:
    """Integer ticks that always label both ends of the k range."""
    inner = _ticks(kmin, kmax, integer=True)
    gap = (inner[1] - inner[0]) / 2 if len(inner) > 1 else 0
    keep = [int(k) for k in inner if k - kmin > gap and kmax - k > gap]
    return sorted({kmin, kmax, *keep})


def plot_svg(rows: list[ExperimentRow], out_dir: str | Path) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for pattern in sorted({r.pattern for r in rows}):
        for family in FAMILIES:
            p = out_dir / f"pattern{pattern}_{family}.svg"
            p.write_text(svg_text(rows, pattern, family), encoding="utf-8")
            paths.append(p)
    return paths


def config_dict(cfg: ExperimentConfig) -> dict:
    d = asdict(cfg)
    d["output_dir"] = None if cfg.output_dir is None else str(cfg.output_dir)
    d["k_values"] = list(cfg.k_values)
    d["depth_limits"] = list(cfg.depth_limits)
    return d
