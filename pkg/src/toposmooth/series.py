"""Series representation and extremum classification.

A series is a function on the path graph of its sample indices: the values
carry all of the topology, while optional x-positions only matter for
geometry (interpolation and plotting). Runs of equal values ("plateaus")
are collapsed to a single extremum anchored at the leftmost index of the
run, which keeps the downstream pairing deterministic.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np


class ExtremumKind(enum.Enum):
    LOCAL_MIN = "min"
    LOCAL_MAX = "max"


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64, copy=True)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """A finite ordered sequence of real sample values.

    Attributes
    ----------
    values : np.ndarray
        Sample values, one per vertex of the (implicit) path graph.
    positions : np.ndarray or None
        Optional strictly increasing x-coordinates, one per sample.
        ``None`` means the default grid 0, 1, 2, ...
    label : str
        Free-form identifier carried through smoothing and reports.
    """

    values: np.ndarray
    positions: np.ndarray | None = None
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _readonly(np.atleast_1d(self.values)))
        if self.positions is not None:
            object.__setattr__(self, "positions", _readonly(np.atleast_1d(self.positions)))

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def xs(self) -> np.ndarray:
        """Positions, defaulting to the integer sample grid."""
        if self.positions is not None:
            return self.positions
        return np.arange(len(self), dtype=np.float64)

    def with_values(self, values: np.ndarray) -> "TimeSeries":
        """A copy of this series with new values but the same positions/label."""
        return TimeSeries(values, self.positions, self.label)


@dataclass(frozen=True)
class ExtremumRecord:
    """One local extremum, possibly representing a run of equal values.

    ``index`` is the leftmost index of the run; ``plateau_span`` is the
    inclusive index range of equal values the extremum stands for.
    """

    index: int
    kind: ExtremumKind
    is_boundary: bool
    plateau_span: tuple[int, int]


def validate(series: TimeSeries) -> list[str]:
    """Collect every invariant violation of a series.

    Returns an empty list when the series is valid. Violations are data,
    not failures: callers that need a hard guarantee use
    :func:`require_valid`.
    """
    problems: list[str] = []
    values = series.values
    n = len(values)
    if n < 2:
        problems.append(f"length {n} < 2")
    bad = np.flatnonzero(~np.isfinite(values))
    for i in bad:
        problems.append(f"non-finite value {values[i]!r} at index {int(i)}")
    if series.positions is not None:
        pos = series.positions
        if len(pos) != n:
            problems.append(f"positions count {len(pos)} != values count {n}")
        bad_pos = np.flatnonzero(~np.isfinite(pos))
        for i in bad_pos:
            problems.append(f"non-finite position at index {int(i)}")
        if len(pos) >= 2 and np.all(np.isfinite(pos)):
            nondec = np.flatnonzero(np.diff(pos) <= 0)
            for i in nondec:
                problems.append(
                    f"positions not strictly increasing at index {int(i) + 1}"
                )
    return problems


def require_valid(series: TimeSeries) -> None:
    """Raise ``ValueError`` listing all violations if the series is invalid."""
    problems = validate(series)
    if problems:
        raise ValueError("invalid series: " + "; ".join(problems))


def _runs(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Start and end indices (inclusive) of maximal runs of equal values."""
    change = np.flatnonzero(np.diff(values) != 0) + 1
    starts = np.concatenate(([0], change))
    ends = np.concatenate((change - 1, [len(values) - 1]))
    return starts, ends


def classify_extrema(series: TimeSeries) -> list[ExtremumRecord]:
    """All local extrema of a series, in increasing index order.

    Plateaus are collapsed to a single record anchored at the leftmost
    index of the run. The first sample is a local minimum iff its value is
    <= the next distinct value (mirrored at the last sample), so the first
    and last records are always boundary extrema and kinds strictly
    alternate. A constant series yields one boundary minimum spanning the
    whole series.
    """
    require_valid(series)
    values = series.values
    starts, ends = _runs(values)
    k = len(starts)
    if k == 1:
        return [
            ExtremumRecord(0, ExtremumKind.LOCAL_MIN, True, (0, len(values) - 1))
        ]

    run_values = values[starts]
    rising = np.diff(run_values) > 0  # run j -> j+1 strictly rises or falls

    records: list[ExtremumRecord] = []
    for j in range(k):
        if j == 0:
            kind = ExtremumKind.LOCAL_MIN if rising[0] else ExtremumKind.LOCAL_MAX
            boundary = True
        elif j == k - 1:
            kind = ExtremumKind.LOCAL_MIN if not rising[k - 2] else ExtremumKind.LOCAL_MAX
            boundary = True
        else:
            if not rising[j - 1] and rising[j]:
                kind = ExtremumKind.LOCAL_MIN
            elif rising[j - 1] and not rising[j]:
                kind = ExtremumKind.LOCAL_MAX
            else:
                continue  # monotone through this run
            boundary = False
        records.append(
            ExtremumRecord(int(starts[j]), kind, boundary, (int(starts[j]), int(ends[j])))
        )
    return records


def collapse_index(values: np.ndarray, index: int) -> int:
    """Leftmost index of the maximal run of equal values containing ``index``."""
    i = index
    while i > 0 and values[i - 1] == values[index]:
        i -= 1
    return i


def global_min_index(values: np.ndarray) -> int:
    """Index of the global minimum (leftmost on ties), run-collapsed."""
    return collapse_index(values, int(np.argmin(values)))


def sample_std(values: np.ndarray) -> float:
    """Sample standard deviation (ddof=1) used for entropy tolerances."""
    if len(values) < 2:
        return 0.0
    return float(np.std(np.asarray(values, dtype=np.float64), ddof=1))


def is_monotone(values: np.ndarray, increasing: bool) -> bool:
    d = np.diff(values)
    return bool(np.all(d >= 0)) if increasing else bool(np.all(d <= 0))


def nearly_equal(a: float, b: float, tol: float = 1e-12) -> bool:
    return math.isclose(a, b, rel_tol=0.0, abs_tol=tol)
