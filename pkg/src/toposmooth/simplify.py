"""Topology-guided smoothing: drop low-persistence pairs, refit isotonically.

Removing an extrema pair flattens the series between the surviving
anchors. Anchors are the extrema of every retained pair, the essential
(global) minimum, and both boundary samples; between consecutive anchors
the output is the least-squares monotone fit of the input segment, clipped
into the interval spanned by the anchor values with the anchor values
restored exactly. Keeping the essential minimum anchored is what makes the
diagram of the output exactly the retained pairs and a zero threshold the
identity.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .persistence import ExtremaPair, PersistenceDiagram, diagram_of
from .series import TimeSeries, require_valid


@dataclass(frozen=True)
class Threshold:
    """Remove every pair with persistence strictly below ``value``."""

    value: float

    def __post_init__(self) -> None:
        if not (self.value >= 0.0):
            raise ValueError(f"threshold must be >= 0, got {self.value}")


@dataclass(frozen=True)
class Fraction:
    """Remove the ``floor(q * m)`` least persistent of the m pairs."""

    value: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.value <= 1.0):
            raise ValueError(f"fraction must be in [0, 1], got {self.value}")


SimplifyPolicy = Threshold | Fraction


def _removal_rank(pair: ExtremaPair) -> tuple[float, int, int]:
    # Equal-persistence pairs can nest; the narrower (inner) interval must
    # be removed first or flattening the outer one would destroy a
    # retained pair. Nesting implies p_inner <= p_outer, so ordering ties
    # by interval width keeps every rank prefix structurally removable.
    width = abs(pair.death_index - pair.birth_index)
    return (pair.persistence, width, pair.birth_index)


def select_pairs(
    diagram: PersistenceDiagram, policy: SimplifyPolicy
) -> tuple[tuple[ExtremaPair, ...], tuple[ExtremaPair, ...]]:
    """Split the diagram's pairs into (retained, removed) under a policy.

    Both lists come back ordered by ascending persistence, ties by
    ascending birth index.
    """
    def order(pairs):
        return tuple(sorted(pairs, key=lambda p: (p.persistence, p.birth_index)))

    if isinstance(policy, Threshold):
        removed = order(p for p in diagram.pairs if p.persistence < policy.value)
        retained = order(p for p in diagram.pairs if p.persistence >= policy.value)
    elif isinstance(policy, Fraction):
        ranked = sorted(diagram.pairs, key=_removal_rank)
        cut = math.floor(policy.value * len(ranked))
        removed = order(ranked[:cut])
        retained = order(ranked[cut:])
    else:
        raise TypeError(f"unknown policy {policy!r}")
    return retained, removed


class Direction(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


def isotonic_fit(values, direction: Direction = Direction.INCREASING) -> np.ndarray:
    """Least-squares monotone projection (pool-adjacent-violators, O(n)).

    The decreasing fit is computed by negating, fitting increasing and
    negating back.
    """
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1 or len(x) == 0:
        raise ValueError("isotonic_fit expects a non-empty 1D sequence")
    if direction is Direction.DECREASING:
        return -isotonic_fit(-x, Direction.INCREASING)

    # Stack of blocks (mean, weight); merge while the tail violates order.
    means: list[float] = []
    weights: list[int] = []
    for v in x:
        m, w = float(v), 1
        while means and means[-1] > m:
            pm, pw = means.pop(), weights.pop()
            m = (m * w + pm * pw) / (w + pw)
            w += pw
        means.append(m)
        weights.append(w)
    return np.repeat(means, weights)


def _anchor_indices(
    diagram: PersistenceDiagram, retained: tuple[ExtremaPair, ...], n: int
) -> list[int]:
    anchors = {0, n - 1, diagram.essential_min_index}
    for p in retained:
        anchors.add(p.birth_index)
        anchors.add(p.death_index)
    return sorted(anchors)


def simplify(series: TimeSeries, policy: SimplifyPolicy) -> TimeSeries:
    """Smooth a series by removing extrema pairs selected by ``policy``.

    The output has the input's length and positions, equals the input at
    every anchor, and is monotone between consecutive anchors (direction
    set by the anchor values).
    """
    require_valid(series)
    diagram = diagram_of(series)
    retained, _ = select_pairs(diagram, policy)
    anchors = _anchor_indices(diagram, retained, len(series))

    values = series.values
    out = np.array(values, dtype=np.float64)
    for left, right in zip(anchors, anchors[1:]):
        if right - left < 2:
            continue
        seg = values[left : right + 1]
        lo, hi = float(values[left]), float(values[right])
        direction = Direction.INCREASING if lo <= hi else Direction.DECREASING
        fitted = isotonic_fit(seg, direction)
        np.clip(fitted, min(lo, hi), max(lo, hi), out=fitted)
        fitted[0], fitted[-1] = lo, hi
        out[left : right + 1] = fitted
    return series.with_values(out)
