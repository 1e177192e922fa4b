"""Command-line front end.

Every circuit argument is a ``dyncirc-v1`` JSON file, or ``-`` for standard
input. Exit codes: 0 success, 1 semantic failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import harness
from .errors import DynCircError
from .expand import rec_branch_expand
from .jsonio import from_json, to_json
from .pathmetrics import metrics
from .peephole import optimize, optimize_pipeline
from .qec import qec_report
from .randgen import GenConfig, gen_pattern1, gen_pattern2, shor_qec_demo
from .simverify import equivalent


class _Usage(Exception):
    pass


def _read(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc}") from None
    return from_json(text)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text + "\n")
        return
    try:
        Path(out).write_text(text + "\n", encoding="utf-8")
    except OSError as exc:
        raise _Usage(f"cannot write {out}: {exc}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_generate(a) -> int:
    if a.pattern == "qec":
        c = shor_qec_demo()
    else:
        cfg = GenConfig(n=a.n, d_s=a.ds, k=a.k, d=a.d, seed=a.seed, p_cx=a.p_cx)
        c = gen_pattern1(cfg) if a.pattern == "1" else gen_pattern2(cfg)
    _write(to_json(c), a.output)
    return 0


def cmd_expand(a) -> int:
    _write(to_json(rec_branch_expand(_read(a.input), a.depth_limit)), a.output)
    return 0


def cmd_optimize(a) -> int:
    _write(to_json(optimize(_read(a.input))), a.output)
    return 0


def cmd_pipeline(a) -> int:
    _write(to_json(optimize_pipeline(_read(a.input), a.depth_limit)), a.output)
    return 0


def cmd_metrics(a) -> int:
    _write(json.dumps(metrics(_read(a.input)).as_dict()), a.output)
    return 0


def cmd_verify(a) -> int:
    ca, cb = _read(a.a), _read(a.b)
    ok = equivalent(ca, cb, a.tol)
    print(json.dumps({"equivalent": ok, "a": a.a, "b": a.b, "tol": a.tol}))
    return 0 if ok else 1


def cmd_experiment(a) -> int:
    ks = list(range(a.k_min, a.k_max + 1))
    if not ks:
        raise _Usage("--k-min must not exceed --k-max")
    cfg = harness.ExperimentConfig(
        pattern=a.pattern, n=a.n, d_s=a.ds, k_values=ks, seeds_per_point=a.seeds,
        depth_limits=a.depth_limits, nesting_d=a.d, output_dir=Path(a.out),
        p_cx=a.p_cx, seed_base=a.seed_base,
    )
    raw: list[dict] | None = [] if a.dump_raw else None
    rows = harness.run_experiment(cfg, raw=raw)
    out = Path(a.out)
    try:
        harness.write_csv(rows, out / f"pattern{a.pattern}.csv")
        harness.plot_svg(rows, out)
        if raw is not None:
            harness.write_raw(raw, out / f"pattern{a.pattern}_raw.jsonl")
    except OSError as exc:
        raise _Usage(f"cannot write to {out}: {exc}") from None
    print(json.dumps({"rows": len(rows), "out": str(out)}))
    return 0


def cmd_demo_qec(a) -> int:
    rep = qec_report(j=a.j)
    print(json.dumps(rep))
    return 0 if rep["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dyncirc", description="Branch expansion for dynamic circuits.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a random benchmark circuit")
    g.add_argument("--pattern", choices=["1", "2", "qec"], required=True)
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--ds", type=int, default=5)
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--d", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--p-cx", type=float, default=0.3)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    for name, func, helptext in (
        ("expand", cmd_expand, "recursive branch expansion"),
        ("pipeline", cmd_pipeline, "branch expansion then peephole optimization"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("input")
        s.add_argument("--depth-limit", type=int, default=1)
        s.add_argument("-o", "--output")
        s.set_defaults(func=func)

    for name, func, helptext in (
        ("optimize", cmd_optimize, "peephole optimization only"),
        ("metrics", cmd_metrics, "execution-path metrics as one JSON line"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("input")
        s.add_argument("-o", "--output")
        s.set_defaults(func=func)

    v = sub.add_parser("verify", help="check two circuits for equivalence")
    v.add_argument("a")
    v.add_argument("b")
    v.add_argument("--tol", type=float, default=1e-9)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("experiment", help="baseline vs. preprocessed comparison")
    e.add_argument("--pattern", type=int, choices=[1, 2], required=True)
    e.add_argument("--n", type=int, default=3)
    e.add_argument("--ds", type=int, default=5)
    e.add_argument("--d", type=int, default=4, help="nesting depth for pattern 2")
    e.add_argument("--k-min", type=int, default=1)
    e.add_argument("--k-max", type=int, default=20)
    e.add_argument("--seeds", type=int, default=25)
    e.add_argument("--seed-base", type=int, default=0)
    e.add_argument("--depth-limits", type=_int_list, default=[1])
    e.add_argument("--p-cx", type=float, default=0.3)
    e.add_argument("--out", required=True)
    e.add_argument("--dump-raw", action="store_true")
    e.set_defaults(func=cmd_experiment)

    q = sub.add_parser("demo-qec", help="9-qubit correction/logical-gate cancellation demo")
    q.add_argument("--j", type=int, default=4)
    q.set_defaults(func=cmd_demo_qec)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (_Usage, DynCircError, ValueError) as exc:
        print(f"dyncirc {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
