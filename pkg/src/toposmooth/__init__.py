"""Persistence-guided smoothing of 1D series.

Smooths a series by removing low-amplitude extrema pairs found by a
sublevel-set sweep and reconstructing the gaps with isotonic regression;
ships five conventional smoothing baselines and an entropy-calibrated,
task-based benchmark that ranks all methods.
"""

from .evaluate import (
    DEFAULT_METHODS,
    EvaluationError,
    EvaluationResult,
    FitLine,
    MethodRank,
    RankReport,
    SweepPoint,
    auc,
    default_grids,
    evaluate_series,
    fit_line,
    rank_methods,
    sweep,
)
from .filters import (
    cutoff_filter,
    douglas_peucker,
    gaussian_filter,
    median_filter,
    uniform_subsample,
)
from .io import load_csv, write_pairs_csv, write_report_json, write_series_csv
from .metrics import (
    DiagramPoint,
    Matching,
    approx_entropy,
    bottleneck,
    norm_l1,
    norm_linf,
    wasserstein1,
    wasserstein1_matching,
)
from .persistence import (
    ExtremaPair,
    MergeTree,
    MergeTreeNode,
    NodeKind,
    PersistenceDiagram,
    compute_persistence,
    diagram_of,
)
from .series import (
    ExtremumKind,
    ExtremumRecord,
    TimeSeries,
    classify_extrema,
    validate,
)
from .simplify import Direction, Fraction, Threshold, isotonic_fit, select_pairs, simplify
from .synth import generate_synthetic

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_METHODS",
    "DiagramPoint",
    "Direction",
    "EvaluationError",
    "EvaluationResult",
    "ExtremaPair",
    "ExtremumKind",
    "ExtremumRecord",
    "FitLine",
    "Fraction",
    "Matching",
    "MergeTree",
    "MergeTreeNode",
    "MethodRank",
    "NodeKind",
    "PersistenceDiagram",
    "RankReport",
    "SweepPoint",
    "Threshold",
    "TimeSeries",
    "approx_entropy",
    "auc",
    "bottleneck",
    "classify_extrema",
    "compute_persistence",
    "cutoff_filter",
    "default_grids",
    "diagram_of",
    "douglas_peucker",
    "evaluate_series",
    "fit_line",
    "gaussian_filter",
    "generate_synthetic",
    "isotonic_fit",
    "load_csv",
    "median_filter",
    "norm_l1",
    "norm_linf",
    "rank_methods",
    "select_pairs",
    "simplify",
    "sweep",
    "uniform_subsample",
    "validate",
    "wasserstein1",
    "wasserstein1_matching",
    "write_pairs_csv",
    "write_report_json",
    "write_series_csv",
]
