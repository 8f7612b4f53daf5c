"""Command-line interface.

Subcommands: ``smooth``, ``persistence``, ``entropy``, ``evaluate``,
``synth``. Exit codes: 0 success, 1 validation error, 2 I/O error.
An optional ``key=value`` config file supplies defaults; explicit flags win.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .evaluate import DEFAULT_METHODS, METRIC_NAMES, evaluate_series
from .filters import (
    cutoff_filter,
    douglas_peucker,
    gaussian_filter,
    median_filter,
    uniform_subsample,
)
from .io import (
    load_csv,
    svg_line_chart,
    svg_metric_scatter,
    write_pairs_csv,
    write_report_json,
    write_series_csv,
    write_sweep_csv,
)
from .metrics import approx_entropy
from .persistence import compute_persistence
from .series import TimeSeries, sample_std
from .simplify import Fraction, Threshold, simplify
from .synth import KINDS, generate_synthetic

SMOOTHERS = {
    "threshold": lambda s, p: simplify(s, Threshold(p)),
    "fraction": lambda s, p: simplify(s, Fraction(p)),
    "median": lambda s, p: median_filter(s, int(p)),
    "gaussian": gaussian_filter,
    "cutoff": lambda s, p: cutoff_filter(s, int(p)),
    "subsample": lambda s, p: uniform_subsample(s, int(p)),
    "douglas-peucker": douglas_peucker,
}

CLI_KINDS = tuple(k.replace("_", "-") for k in KINDS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toposmooth",
        description="Persistence-guided series smoothing, baselines and benchmark",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smooth", help="smooth a series with one method")
    p.add_argument("--config", type=str, default=None)
    p.add_argument("--input", type=str, required=True, help="input CSV")
    p.add_argument("--method", choices=sorted(SMOOTHERS), required=True)
    p.add_argument("--param", type=float, required=True)
    p.add_argument("--output", type=str, required=True, help="output CSV")
    p.add_argument("--svg", type=str, default=None, help="overlay chart path")

    p = sub.add_parser("persistence", help="emit extrema pairs as CSV")
    p.add_argument("--config", type=str, default=None)
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--output", type=str, required=True)

    p = sub.add_parser("entropy", help="print approximate entropy")
    p.add_argument("--config", type=str, default=None)
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--r-factor", type=float, default=0.2)

    p = sub.add_parser("evaluate", help="full sweep, fit, AUC and rank report")
    p.add_argument("--config", type=str, default=None)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=str, default=None)
    src.add_argument("--synth-kind", choices=CLI_KINDS, default=None)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--r-factor", type=float, default=0.2)
    p.add_argument("--out-dir", type=str, required=True)
    p.add_argument("--emit", type=str, default="csv,json,svg")

    p = sub.add_parser("synth", help="generate a synthetic dataset CSV")
    p.add_argument("--config", type=str, default=None)
    p.add_argument("--kind", choices=CLI_KINDS, required=True)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--output", type=str, required=True)
    return parser


def _apply_config_file(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Inject key=value config entries as defaults; explicit flags win."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        raise ValueError("--config requires a file path")
    path = argv[at + 1]
    pairs = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {line!r} is not key=value")
        key, value = line.split("=", 1)
        pairs[key.strip().replace("-", "_")] = value.strip()
    # Find the subcommand parser and coerce strings via each action's type.
    sub_actions = [a for a in parser._actions if isinstance(a, argparse._SubParsersAction)]
    command = next((a for a in argv if not a.startswith("-")), None)
    if sub_actions and command in sub_actions[0].choices:
        sub_parser = sub_actions[0].choices[command]
        defaults = {}
        for action in sub_parser._actions:
            if action.dest in pairs:
                value = pairs[action.dest]
                defaults[action.dest] = action.type(value) if action.type else value
                if action.required:
                    action.required = False
        sub_parser.set_defaults(**defaults)
    return argv


def _load_input(args) -> TimeSeries:
    if getattr(args, "input", None):
        return load_csv(args.input)
    return generate_synthetic(args.synth_kind, args.n, args.seed)


def _cmd_smooth(args) -> int:
    series = load_csv(args.input)
    smoothed = SMOOTHERS[args.method](series, args.param)
    write_series_csv(args.output, smoothed)
    if args.svg:
        chart = svg_line_chart(
            [("original", series), (args.method, smoothed)],
            title=f"{series.label}: {args.method}({args.param:g})",
        )
        Path(args.svg).write_text(chart, encoding="utf-8")
    return 0


def _cmd_persistence(args) -> int:
    series = load_csv(args.input)
    diagram, _ = compute_persistence(series)
    write_pairs_csv(args.output, diagram)
    return 0


def _cmd_entropy(args) -> int:
    series = load_csv(args.input)
    r = args.r_factor * sample_std(series.values)
    print(repr(approx_entropy(series, m=args.m, r=r)))
    return 0


def _cmd_evaluate(args) -> int:
    series = _load_input(args)
    result = evaluate_series(series, m=args.m, r_factor=args.r_factor)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    emit = {e.strip() for e in args.emit.split(",") if e.strip()}
    config_echo = {
        "dataset": series.label,
        "methods": list(DEFAULT_METHODS),
        "m": args.m,
        "r_factor": args.r_factor,
        "seed": args.seed if args.input is None else None,
        "n": len(series),
        "source": "csv" if args.input else args.synth_kind,
    }
    stem = series.label or "series"
    if "json" in emit:
        write_report_json(out / f"{stem}_report.json", result, config_echo)
    if "csv" in emit:
        write_sweep_csv(out / f"{stem}_sweep.csv", result)
    if "svg" in emit:
        for metric in METRIC_NAMES:
            chart = svg_metric_scatter(
                metric,
                result.sweep_points,
                result.fits,
                title=f"{stem}: {metric} vs entropy",
            )
            (out / f"{stem}_{metric}.svg").write_text(chart, encoding="utf-8")
    overall = sorted(result.report.overall.items(), key=lambda kv: (kv[1], kv[0]))
    for method, rank in overall:
        print(f"{method}: average rank {rank:g}")
    return 0


def _cmd_synth(args) -> int:
    series = generate_synthetic(args.kind, args.n, args.seed)
    write_series_csv(args.output, series)
    return 0


_COMMANDS = {
    "smooth": _cmd_smooth,
    "persistence": _cmd_persistence,
    "entropy": _cmd_entropy,
    "evaluate": _cmd_evaluate,
    "synth": _cmd_synth,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config_file(parser, argv)
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
