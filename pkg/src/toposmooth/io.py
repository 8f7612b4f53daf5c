"""CSV/JSON/SVG emission and CSV ingestion.

Floats are written with Python's shortest round-trip representation, so
CSV round-trips are exact and JSON reports are byte-stable under
parse/re-serialize.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .evaluate import METRIC_NAMES, EvaluationResult, FitLine, SweepPoint
from .persistence import PersistenceDiagram
from .series import TimeSeries


def load_csv(source) -> TimeSeries:
    """Read a series from CSV text: one value per line, or ``x,y`` pairs.

    Lines starting with ``#`` and blank lines are skipped; one leading
    header line is tolerated. Raises ``ValueError`` naming the offending
    line for unparseable numbers, non-increasing x, or fewer than 2 rows.
    """
    if hasattr(source, "read"):
        text = source.read()
        label = getattr(source, "name", "stream")
    else:
        path = Path(source)
        text = path.read_text(encoding="utf-8")
        label = path.stem

    values: list[float] = []
    positions: list[float] = []
    saw_data = False
    header_skipped = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) > 2:
            raise ValueError(f"line {lineno}: expected 1 or 2 columns, got {len(fields)}")
        try:
            row = [float(f) for f in fields]
        except ValueError:
            if not saw_data and not header_skipped:
                header_skipped = True
                continue
            raise ValueError(f"line {lineno}: unparseable number in {line!r}") from None
        saw_data = True
        if len(row) == 2:
            positions.append(row[0])
            values.append(row[1])
        else:
            values.append(row[0])
    if len(values) < 2:
        raise ValueError(f"need at least 2 data rows, got {len(values)}")
    if positions and len(positions) != len(values):
        raise ValueError("mixed 1-column and 2-column rows")
    if positions:
        deltas = np.diff(positions)
        if np.any(deltas <= 0):
            bad = int(np.flatnonzero(deltas <= 0)[0]) + 1
            raise ValueError(f"x values not strictly increasing at data row {bad + 1}")
        return TimeSeries(values, positions, label=str(label))
    return TimeSeries(values, label=str(label))


def fmt(x: float) -> str:
    """Shortest decimal representation that round-trips exactly."""
    return repr(float(x))


def write_series_csv(path, series: TimeSeries) -> None:
    lines = []
    if series.positions is not None:
        for x, y in zip(series.positions, series.values):
            lines.append(f"{fmt(x)},{fmt(y)}")
    else:
        lines = [fmt(y) for y in series.values]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_pairs_csv(path, diagram: PersistenceDiagram) -> None:
    lines = ["birth_index,death_index,birth,death,persistence"]
    for p in diagram.pairs:
        lines.append(
            f"{p.birth_index},{p.death_index},{fmt(p.birth_value)},"
            f"{fmt(p.death_value)},{fmt(p.persistence)}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def canonical_json(obj) -> str:
    """Canonical serialization: sorted keys, two-space indent, newline EOF."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def report_to_dict(result: EvaluationResult, config_echo: dict) -> dict:
    """Rank-report payload with a stable shape for serialization."""
    report = result.report
    metrics = {}
    for metric in METRIC_NAMES:
        metrics[metric] = {
            entry.method: {
                "auc": entry.auc,
                "rank": entry.rank,
                "unrankable": entry.unrankable,
            }
            for entry in report.per_metric[metric]
        }
    points = []
    for method in sorted(result.sweep_points):
        for p in result.sweep_points[method]:
            points.append(asdict(p))
    return {
        "dataset": report.dataset,
        "methods": list(report.methods),
        "metrics": metrics,
        "overall_rank": dict(sorted(report.overall.items())),
        "shared_entropy_domain": list(report.shared_domain),
        "sweep_points": points,
        "failures": list(result.failures),
        "config": config_echo,
    }


def write_report_json(path, result: EvaluationResult, config_echo: dict) -> None:
    Path(path).write_text(
        canonical_json(report_to_dict(result, config_echo)), encoding="utf-8"
    )


def write_sweep_csv(path, result: EvaluationResult) -> None:
    lines = ["method,parameter,entropy,l1,linf,w1,bottleneck"]
    for method in sorted(result.sweep_points):
        for p in result.sweep_points[method]:
            lines.append(
                f"{p.method},{fmt(p.parameter)},{fmt(p.entropy)},{fmt(p.l1)},"
                f"{fmt(p.linf)},{fmt(p.w1)},{fmt(p.bottleneck)}"
            )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# --- static SVG charts -----------------------------------------------------

_PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
)

_W, _H, _M = 720, 400, 48


def _scale(values, lo, hi, out_lo, out_hi):
    span = hi - lo if hi > lo else 1.0
    return [(v - lo) / span * (out_hi - out_lo) + out_lo for v in values]


def _svg_header(title: str) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{title}</text>',
        f'<rect x="{_M}" y="{_M}" width="{_W - 2 * _M}" height="{_H - 2 * _M}" '
        f'fill="none" stroke="#cccccc"/>',
    ]


def svg_line_chart(series_list: list[tuple[str, TimeSeries]], title: str) -> str:
    """Overlayed line chart, one polyline per series."""
    all_x = np.concatenate([s.xs for _, s in series_list])
    all_y = np.concatenate([s.values for _, s in series_list])
    x_lo, x_hi = float(all_x.min()), float(all_x.max())
    y_lo, y_hi = float(all_y.min()), float(all_y.max())
    parts = _svg_header(title)
    for i, (name, s) in enumerate(series_list):
        px = _scale(s.xs, x_lo, x_hi, _M, _W - _M)
        py = _scale(s.values, y_lo, y_hi, _H - _M, _M)
        pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(px, py))
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.2"/>'
        )
        parts.append(
            f'<text x="{_W - _M - 4}" y="{_M + 16 + 14 * i}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def svg_metric_scatter(
    metric: str,
    points_by_method: dict[str, tuple[SweepPoint, ...]],
    fits: dict[tuple[str, str], FitLine],
    title: str,
) -> str:
    """Metric-versus-entropy scatter with each method's fitted line."""
    xs = [p.entropy for pts in points_by_method.values() for p in pts]
    ys = [p.metric(metric) for pts in points_by_method.values() for p in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(0.0, min(ys)), max(ys)
    parts = _svg_header(title)
    for i, method in enumerate(sorted(points_by_method)):
        color = _PALETTE[i % len(_PALETTE)]
        for p in points_by_method[method]:
            cx = _scale([p.entropy], x_lo, x_hi, _M, _W - _M)[0]
            cy = _scale([p.metric(metric)], y_lo, y_hi, _H - _M, _M)[0]
            parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="2.5" fill="{color}"/>')
        fit = fits.get((method, metric))
        if fit is not None:
            e0, e1 = fit.domain
            px = _scale([e0, e1], x_lo, x_hi, _M, _W - _M)
            py = _scale([fit.value_at(e0), fit.value_at(e1)], y_lo, y_hi, _H - _M, _M)
            parts.append(
                f'<line x1="{px[0]:.2f}" y1="{py[0]:.2f}" x2="{px[1]:.2f}" '
                f'y2="{py[1]:.2f}" stroke="{color}" stroke-width="1"/>'
            )
        parts.append(
            f'<text x="{_W - _M - 4}" y="{_M + 16 + 14 * i}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11" fill="{color}">{method}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
