import numpy as np
import pytest
from helpers import any_series, random_values
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import isotonic_best

from toposmooth import (
    Direction,
    ExtremaPair,
    Fraction,
    PersistenceDiagram,
    Threshold,
    TimeSeries,
    diagram_of,
    isotonic_fit,
    select_pairs,
    simplify,
)


def make_diagram(persistences):
    pairs = tuple(
        ExtremaPair(birth_index=2 * i + 1, death_index=2 * i + 2, birth_value=0.0, death_value=p)
        for i, p in enumerate(persistences)
    )
    return PersistenceDiagram(pairs=pairs, essential_min_index=0)


class TestSelectPairs:
    def test_threshold_splits_strictly_below(self):
        retained, removed = select_pairs(make_diagram([2.0, 3.0, 4.0]), Threshold(2.5))
        assert [p.persistence for p in removed] == [2.0]
        assert [p.persistence for p in retained] == [3.0, 4.0]

    def test_threshold_zero_removes_nothing(self):
        retained, removed = select_pairs(make_diagram([2.0, 3.0, 4.0]), Threshold(0.0))
        assert removed == ()
        assert len(retained) == 3

    def test_fraction_floor(self):
        retained, removed = select_pairs(make_diagram([2.0, 3.0, 4.0]), Fraction(0.34))
        assert [p.persistence for p in removed] == [2.0]
        assert len(retained) == 2

    def test_fraction_one_removes_all(self):
        retained, removed = select_pairs(make_diagram([2.0, 3.0, 4.0]), Fraction(1.0))
        assert retained == ()
        assert len(removed) == 3

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            Threshold(-1.0)
        with pytest.raises(ValueError):
            Fraction(1.5)
        with pytest.raises(ValueError):
            Fraction(-0.1)

    def test_nested_equal_persistence_ties_remove_inner_first(self):
        # Pairs (1,6) and (3,2) both have persistence 2.0 and nest
        # ([2,3] inside [1,6]); a fraction cut that splits the tie must
        # drop the inner pair, else flattening the outer one would destroy
        # a retained extremum.
        values = [-1.0, -1.5, 0.5, -1.5, -1.0, -1.0, 0.5, -3.0]
        series = TimeSeries(values)
        d = diagram_of(series)
        nested = [p for p in d.pairs if p.persistence == 2.0]
        assert len(nested) == 2
        retained, removed = select_pairs(d, Fraction(0.5))
        assert [(p.birth_index, p.death_index) for p in removed] == [(3, 2)]
        out = simplify(series, Fraction(0.5))
        got = sorted((p.birth_value, p.death_value) for p in diagram_of(out).pairs)
        assert got == sorted((p.birth_value, p.death_value) for p in retained)

    def test_ordering_ascending_persistence_then_birth(self):
        d = diagram_of([0, 3, 1, 4, 2, 5, 0, 6, 1, 3])
        retained, removed = select_pairs(d, Threshold(2.5))
        for group in (retained, removed):
            keys = [(p.persistence, p.birth_index) for p in group]
            assert keys == sorted(keys)
        assert set(retained) | set(removed) == set(d.pairs)
        assert not set(retained) & set(removed)


class TestIsotonic:
    def test_single_violation_pools_to_mean(self):
        assert np.allclose(isotonic_fit([1, 3, 2, 4]), [1, 2.5, 2.5, 4])

    def test_already_monotone_is_identity(self):
        assert np.array_equal(isotonic_fit([1, 2, 3]), [1, 2, 3])

    def test_decreasing_pools_interior_violation(self):
        assert np.allclose(
            isotonic_fit([5, 2, 4, 0], Direction.DECREASING), [5, 3, 3, 0]
        )

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            isotonic_fit([])

    @given(
        st.lists(
            st.integers(0, 8).map(lambda v: v * 0.25), min_size=1, max_size=6
        )
    )
    def test_matches_partition_oracle(self, values):
        fit = isotonic_fit(values)
        assert np.all(np.diff(fit) >= 0)
        _, best_sse = isotonic_best(values)
        sse = float(np.sum((fit - np.asarray(values)) ** 2))
        assert abs(sse - best_sse) <= 1e-9

    @given(st.lists(st.floats(-50, 50, allow_nan=False, width=32), min_size=1, max_size=40))
    def test_decreasing_is_negated_increasing(self, values):
        direct = isotonic_fit(values, Direction.DECREASING)
        assert np.all(np.diff(direct) <= 0)
        assert np.array_equal(direct, -isotonic_fit([-v for v in values]))


class TestSimplify:
    def test_threshold_example(self):
        out = simplify(TimeSeries([1, 5, 2, 4, 0, 3]), Threshold(2.5))
        assert np.allclose(out.values, [1, 5, 3, 3, 0, 3])

    def test_threshold_zero_is_identity(self):
        series = TimeSeries([1, 5, 2, 4, 0, 3])
        out = simplify(series, Threshold(0.0))
        assert np.array_equal(out.values, series.values)

    def test_full_fraction_flattens_everything_but_the_essential(self):
        # Oracle-derived: the essential minimum at index 4 stays anchored,
        # so full removal leaves a decreasing ramp into it.
        out = simplify(TimeSeries([1, 5, 2, 4, 0, 3]), Fraction(1.0))
        assert np.allclose(out.values, [1, 1, 1, 1, 0, 3])

    def test_positions_and_label_preserved(self):
        series = TimeSeries([1, 5, 2, 4], positions=[0, 1, 4, 9], label="x")
        out = simplify(series, Threshold(10.0))
        assert np.array_equal(out.positions, series.positions)
        assert out.label == "x"
        assert len(out) == len(series)

    @given(any_series, st.floats(0, 10, allow_nan=False))
    def test_monotone_input_is_fixed_point(self, values, t):
        ramp = sorted(values)
        out = simplify(TimeSeries(ramp), Threshold(t))
        assert np.array_equal(out.values, np.asarray(ramp))

    @given(any_series, st.floats(0, 12, allow_nan=False))
    def test_idempotent(self, values, t):
        once = simplify(TimeSeries(values), Threshold(t))
        twice = simplify(once, Threshold(t))
        assert np.array_equal(once.values, twice.values)

    @given(any_series, st.floats(0, 12, allow_nan=False), st.floats(0, 12, allow_nan=False))
    def test_threshold_monotonicity(self, values, t1, t2):
        t1, t2 = min(t1, t2), max(t1, t2)
        d = diagram_of(values)
        retained_loose, _ = select_pairs(d, Threshold(t1))
        retained_tight, _ = select_pairs(d, Threshold(t2))
        assert set(retained_tight) <= set(retained_loose)

    @given(any_series)
    def test_zero_threshold_zero_residual(self, values):
        out = simplify(TimeSeries(values), Threshold(0.0))
        assert float(np.max(np.abs(out.values - np.asarray(values)))) == 0.0


def _segments_monotone(values, anchors):
    for left, right in zip(anchors, anchors[1:]):
        seg = values[left : right + 1]
        if values[left] <= values[right]:
            assert np.all(np.diff(seg) >= 0)
        else:
            assert np.all(np.diff(seg) <= 0)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_output_structure_random(seed):
    rng = np.random.default_rng(seed)
    for _ in range(100):
        n = int(rng.integers(2, 65))
        values = random_values(rng, n)
        series = TimeSeries(values)
        d = diagram_of(series)
        if rng.integers(0, 2):
            max_p = max((p.persistence for p in d.pairs), default=1.0)
            policy = Threshold(float(rng.uniform(0, 1.2 * max_p)))
        else:
            policy = Fraction(float(rng.uniform(0, 1)))
        retained, _ = select_pairs(d, policy)
        out = simplify(series, policy)

        anchors = sorted(
            {0, n - 1, d.essential_min_index}
            | {p.birth_index for p in retained}
            | {p.death_index for p in retained}
        )
        # Exact at anchors, monotone in between, diagram equals retained.
        for a in anchors:
            assert out.values[a] == values[a]
        _segments_monotone(out.values, anchors)
        got = sorted((p.birth_value, p.death_value) for p in diagram_of(out).pairs)
        expected = sorted((p.birth_value, p.death_value) for p in retained)
        assert got == expected
