"""Sublevel-set persistence of a 1D series.

Sweeping a threshold upward through the sample values, each local minimum
creates a connected component of the sublevel set and each interior local
maximum merges exactly two of them. At a merge, the component whose
minimum has the larger value (ties: larger index, i.e. the component
created later in the sweep) dies and is paired with the merging maximum;
its persistence is the peak-to-peak amplitude ``death - birth``. The
component of the global minimum never dies and is reported separately as
the essential record rather than as a pair.

The sweep runs on the extrema alone: non-extremal samples are removed
after classification, so the cost is O(n) to classify plus
O(m log m) to sort and merge m extrema.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .series import (
    ExtremumKind,
    ExtremumRecord,
    TimeSeries,
    classify_extrema,
    require_valid,
)


@dataclass(frozen=True)
class ExtremaPair:
    """A (local minimum, local maximum) pair with finite persistence."""

    birth_index: int
    death_index: int
    birth_value: float
    death_value: float

    @property
    def persistence(self) -> float:
        return self.death_value - self.birth_value


@dataclass(frozen=True)
class PersistenceDiagram:
    """All finite pairs of a series plus the essential (never-dying) record.

    ``pairs`` is sorted by ascending persistence, ties by ascending
    birth index. ``essential_min_index`` is the index of the global
    minimum, whose component survives the whole sweep.
    """

    pairs: tuple[ExtremaPair, ...]
    essential_min_index: int

    def finite_points(self) -> tuple[tuple[float, float], ...]:
        """(birth_value, death_value) coordinates of the finite pairs."""
        return tuple((p.birth_value, p.death_value) for p in self.pairs)


class NodeKind(enum.Enum):
    LEAF = "leaf"
    MERGE = "merge"
    ROOT = "root"


@dataclass(frozen=True)
class MergeTreeNode:
    node_id: int
    f_value: float
    sample_index: int
    kind: NodeKind
    parent: int | None
    children: tuple[int, ...]
    paired_leaf: int | None = None


@dataclass(frozen=True)
class MergeTree:
    """Component-merge structure of the sweep, kept as an inspectable artifact."""

    nodes: tuple[MergeTreeNode, ...]

    def leaves(self) -> tuple[MergeTreeNode, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.LEAF)

    def merges(self) -> tuple[MergeTreeNode, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.MERGE)


class _UnionFind:
    """Disjoint sets over extremum slots, tracking each component's minimum."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        # comp_min[root] = (value, collapsed index, slot) of the component minimum
        self.comp_min: list[tuple[float, int, int] | None] = [None] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        """Merge the components of roots ``a`` and ``b``; returns the new root."""
        if a == b:
            return a
        self.parent[b] = a
        ma, mb = self.comp_min[a], self.comp_min[b]
        if mb is not None and (ma is None or mb < ma):
            self.comp_min[a] = mb
        return a


def _sweep(
    values: np.ndarray,
    extrema: list[ExtremumRecord],
    build_tree: bool,
) -> tuple[PersistenceDiagram, MergeTree | None]:
    k = len(extrema)
    order = sorted(range(k), key=lambda j: (values[extrema[j].index], extrema[j].index))

    uf = _UnionFind(k)
    active = [False] * k
    pairs: list[ExtremaPair] = []

    nodes: list[dict] = []
    leaf_of_slot: dict[int, int] = {}
    comp_top: dict[int, int] = {}

    def new_node(f: float, idx: int, kind: NodeKind, children=(), paired=None) -> int:
        nid = len(nodes)
        nodes.append(
            dict(
                node_id=nid,
                f_value=float(f),
                sample_index=int(idx),
                kind=kind,
                parent=None,
                children=tuple(children),
                paired_leaf=paired,
            )
        )
        for c in children:
            nodes[c]["parent"] = nid
        return nid

    for j in order:
        rec = extrema[j]
        v = float(values[rec.index])
        if rec.kind is ExtremumKind.LOCAL_MIN:
            uf.comp_min[j] = (v, rec.index, j)
            if build_tree:
                nid = new_node(v, rec.index, NodeKind.LEAF)
                leaf_of_slot[j] = nid
                comp_top[j] = nid
        else:
            neighbours = [s for s in (j - 1, j + 1) if 0 <= s < k and active[s]]
            roots = sorted({uf.find(s) for s in neighbours})
            if len(roots) == 2:
                ra, rb = roots
                min_a, min_b = uf.comp_min[ra], uf.comp_min[rb]
                assert min_a is not None and min_b is not None
                # Larger (value, index) key dies: elder component survives.
                dying = min_a if min_a > min_b else min_b
                pairs.append(
                    ExtremaPair(
                        birth_index=dying[1],
                        death_index=rec.index,
                        birth_value=dying[0],
                        death_value=v,
                    )
                )
                merged = uf.union(ra, rb)
                uf.union(merged, uf.find(j))
                if build_tree:
                    children = (comp_top.pop(ra), comp_top.pop(rb))
                    nid = new_node(
                        v, rec.index, NodeKind.MERGE, children, leaf_of_slot[dying[2]]
                    )
                    comp_top[uf.find(merged)] = nid
            elif len(roots) == 1:
                # A boundary maximum extends its single neighbouring component.
                top = comp_top.pop(roots[0], None) if build_tree else None
                merged = uf.union(roots[0], uf.find(j))
                if build_tree and top is not None:
                    comp_top[uf.find(merged)] = top
        active[j] = True

    root = uf.find(order[0])
    essential = uf.comp_min[root]
    assert essential is not None
    diagram = PersistenceDiagram(
        pairs=tuple(sorted(pairs, key=lambda p: (p.persistence, p.birth_index))),
        essential_min_index=essential[1],
    )

    tree: MergeTree | None = None
    if build_tree:
        g = int(np.argmax(values))
        top = comp_top[uf.find(root)]
        rid = new_node(values[g], g, NodeKind.ROOT, (top,))
        tree = MergeTree(
            nodes=tuple(
                MergeTreeNode(
                    node_id=n["node_id"],
                    f_value=n["f_value"],
                    sample_index=n["sample_index"],
                    kind=n["kind"],
                    parent=n["parent"] if n["node_id"] != rid else None,
                    children=n["children"],
                    paired_leaf=n["paired_leaf"],
                )
                for n in nodes
            )
        )
    return diagram, tree


def compute_persistence(series: TimeSeries) -> tuple[PersistenceDiagram, MergeTree]:
    """Persistence diagram and merge tree of a series.

    A constant series has no finite pairs; the single plateau is the
    essential record and the tree degenerates to one leaf under the root.
    """
    extrema = classify_extrema(series)  # validates
    diagram, tree = _sweep(series.values, extrema, build_tree=True)
    assert tree is not None
    return diagram, tree


def diagram_of(values) -> PersistenceDiagram:
    """Persistence diagram of raw values (merge tree discarded)."""
    if isinstance(values, TimeSeries):
        series = values
    else:
        series = TimeSeries(np.asarray(values, dtype=np.float64))
    extrema = classify_extrema(series)  # validates
    diagram, _ = _sweep(series.values, extrema, build_tree=False)
    return diagram
