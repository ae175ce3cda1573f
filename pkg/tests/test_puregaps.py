import itertools

import numpy as np
import pytest

from kummergaps.curve import INF, new_curve
from kummergaps.errors import PlaceError
from kummergaps.puregaps import (
    all_selections,
    box_points,
    bottom_pure_gaps,
    expand_bottom,
    extend_pure_gap,
    full_pure_gap_set,
    is_pure_gap,
    is_pure_gap_oracle,
    permute_selection,
    project_pure_gap,
    pure_gap_mask,
    pure_gap_mask_oracle,
    scan_pure_gap_set,
    shift_vectors,
)

from conftest import RECORD_SET, random_curves


def test_record_full_set(record):
    got = full_pure_gap_set(record, (1, 2))
    assert set(got) == RECORD_SET
    assert got == sorted(got)
    assert got == scan_pure_gap_set(record, (1, 2))


def test_record_bottom_set(record):
    bottom = bottom_pure_gaps(record, (1, 2))
    assert set(bottom) == RECORD_SET - {(2, 9), (10, 1)}
    assert len(bottom) == 16
    assert bottom.caps[(2, 1)] == 1
    assert bottom.tuples == bottom_pure_gaps(record, (1, 2), pruned=False).tuples


@pytest.mark.parametrize("a, expected", [((1, 1), True), ((3, 1), False), ((2, 9), True), ((10, 1), True), ((2, 10), False), ((8, 1), False)])
def test_record_membership(record, a, expected):
    assert is_pure_gap(record, (1, 2), a) is expected
    assert is_pure_gap_oracle(record, (1, 2), a) is expected


def test_small_curve(c35):
    assert full_pure_gap_set(c35, (1, 2)) == [(1, 1), (1, 2), (1, 4), (2, 1), (4, 1)]
    assert full_pure_gap_set(c35, (1, 2, 3, 4)) == []
    assert full_pure_gap_set(c35, (INF, 1, 2, 3)) == []
    assert full_pure_gap_set(new_curve(2, [1]), (1,)) == []


def test_input_validation(record):
    with pytest.raises(ValueError):
        is_pure_gap(record, (1, 2), (1,))
    with pytest.raises(ValueError):
        is_pure_gap_oracle(record, (1, 2), (1, -1))
    with pytest.raises(PlaceError):
        is_pure_gap(new_curve(8, [4, 3, 1]), (1,), (1,))
    with pytest.raises(ValueError):
        pure_gap_mask(record, (1, 2), np.zeros((3, 3), dtype=int))


def test_masks_match_scalar_paths(record):
    grid = box_points([0, 0, 0], [10, 10, 10])
    sel = (0, 1, 2)
    fast = pure_gap_mask(record, sel, grid)
    slow = pure_gap_mask_oracle(record, sel, grid)
    assert (fast == slow).all()
    for row, f in zip(grid[::37], fast[::37]):
        assert is_pure_gap(record, sel, row) == is_pure_gap_oracle(record, sel, row) == bool(f)


def test_box_points_order():
    pts = box_points([1, 1], [2, 3])
    assert pts.tolist() == [[1, 1], [1, 2], [1, 3], [2, 1], [2, 2], [2, 3]]
    assert box_points([2], [1]).shape == (0, 1)


def test_shift_vectors():
    vecs = list(shift_vectors(3, 2))
    assert len(vecs) == 10 and all(sum(v) <= 2 for v in vecs)
    assert list(shift_vectors(0, 5)) == [()]


def test_caps_are_tight():
    for c in random_curves(40, max_m=7, max_r=4, seed=7):
        for sel in all_selections(c, 2):
            bottom = bottom_pure_gaps(c, sel)
            for a in bottom:
                k = bottom.caps[a]
                assert k >= 0
                assert all(1 <= x <= c.m - 1 for x in a)
                for i in range(len(a)):
                    up = list(a)
                    up[i] += c.m * (k + 1)
                    assert not is_pure_gap_oracle(c, sel, up)


def test_bottom_reconstruction_and_pruning():
    for c in random_curves(60, max_m=7, max_r=4, seed=11):
        for sel in all_selections(c, 3):
            if len(sel) == 3 and c.genus > 9:
                continue
            bottom = bottom_pure_gaps(c, sel)
            assert bottom.tuples == bottom_pure_gaps(c, sel, pruned=False).tuples
            assert expand_bottom(bottom, c.m) == scan_pure_gap_set(c, sel)


@pytest.mark.parametrize("known, a, expected", [((2,), 1, True), ((2, 3), 4, True), ((2, 4), 5, False)])
def test_extend_pure_gap_examples(record, known, a, expected):
    assert extend_pure_gap(record, (1, 2), known, a, check=True) is expected


def test_extend_pure_gap_matches_criterion():
    for c in random_curves(60, max_m=9, max_r=4, seed=3):
        for sel in all_selections(c, 3):
            if len(sel) < 2:
                continue
            for prefix in full_pure_gap_set(c, sel[:-1]):
                assert extend_pure_gap(c, sel, prefix, 1) == is_pure_gap(c, sel, prefix + (1,))
            for known in full_pure_gap_set(c, sel):
                if 1 <= known[-1] <= c.m - 2:
                    a = known[-1] + 1
                    assert extend_pure_gap(c, sel, known, a) == is_pure_gap(c, sel, known[:-1] + (a,))


def test_extend_pure_gap_hypothesis_checks(record):
    with pytest.raises(ValueError):
        extend_pure_gap(record, (1, 2), (3,), 1, check=True)
    with pytest.raises(ValueError):
        extend_pure_gap(record, (1, 2), (2,), 2)
    with pytest.raises(ValueError):
        extend_pure_gap(record, (1, 2), (2, 3), 5)
    with pytest.raises(ValueError):
        extend_pure_gap(record, (1,), (2,), 1)


def test_projection_examples(record, c35):
    assert project_pure_gap(record, (1, 2), (2, 9), [0]) == (2,)
    assert project_pure_gap(record, (1, 2), (2, 9), [0, 1]) == (2, 9)
    assert project_pure_gap(c35, (1, 2), (1, 4), [1]) == (4,)
    with pytest.raises(AssertionError):
        project_pure_gap(record, (1, 2), (3, 1), [0])


def test_projection_closure():
    for c in random_curves(60, max_m=8, max_r=4, seed=5):
        for sel in all_selections(c, 3):
            for a in full_pure_gap_set(c, sel):
                for size in range(1, len(sel)):
                    for sub in itertools.combinations(range(len(sel)), size):
                        project_pure_gap(c, sel, a, sub)


def test_permutation_equivariance():
    for c in random_curves(40, max_m=8, max_r=4, seed=9):
        for sel in all_selections(c, 3):
            base = set(full_pure_gap_set(c, sel))
            for perm in itertools.permutations(range(len(sel))):
                moved = set(full_pure_gap_set(c, permute_selection(sel, perm)))
                assert moved == {tuple(a[i] for i in perm) for a in base}


def test_equal_multiplicity_symmetry():
    c = new_curve(7, [2] * 5)
    g = set(full_pure_gap_set(c, (1, 2, 3)))
    assert g
    for perm in itertools.permutations(range(3)):
        assert {tuple(a[i] for i in perm) for a in g} == g
