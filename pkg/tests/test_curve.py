from math import gcd

import pytest
from hypothesis import given, strategies as st

from kummergaps.curve import (
    INF,
    check_floor_minus,
    floor_sum,
    genus,
    mod_inverse,
    new_curve,
    parse_place,
    place_label,
    selection,
)
from kummergaps.errors import CurveError, PlaceError

from conftest import random_curves


@pytest.mark.parametrize("m, lams, lam0", [(8, [3, 7, 7], -17), (2, [1], -1), (9, [1, 1, 1, 1], -4)])
def test_lambda0(m, lams, lam0):
    c = new_curve(m, lams)
    assert c.lambda0 == lam0
    assert sum(c.multiplicities) == 0


@pytest.mark.parametrize("m, lams", [(1, [1]), (0, [1]), (3, []), (3, [1, 0])])
def test_rejects_bad_curves(m, lams):
    with pytest.raises(CurveError):
        new_curve(m, lams)


def test_overflow_guard():
    with pytest.raises(CurveError):
        new_curve(3, [2**62, 1, 1])


@pytest.mark.parametrize("m, lams, g", [(8, [3, 7, 7], 7), (2, [1], 0), (9, [1, 1, 1, 1], 12), (3, [4] * 5, 4)])
def test_genus(m, lams, g):
    assert genus(new_curve(m, lams)) == g


def test_equal_multiplicity_genus_law():
    for m in range(2, 31):
        for r in range(1, 11):
            for lam in range(1, 4):
                if gcd(r * lam, m) == 1:
                    assert new_curve(m, [lam] * r).genus == (r - 1) * (m - 1) // 2


@pytest.mark.parametrize("a, m, inv", [(3, 8, 3), (7, 8, 7), (-17, 8, 7)])
def test_mod_inverse_examples(a, m, inv):
    assert mod_inverse(a, m) == inv


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(ValueError):
        mod_inverse(4, 8)


@given(st.integers(2, 200), st.integers(-10**6, 10**6))
def test_mod_inverse_property(m, a):
    if gcd(a % m, m) != 1:
        return
    x = mod_inverse(a, m)
    assert 1 <= x <= m - 1 or m == 2 and x == 1
    assert (a * x) % m == 1 % m


def test_floor_sum_examples(record):
    assert floor_sum(record, (1, 2), (1, 1), 0) == 0
    t = (-1 * mod_inverse(3, 8)) % 8
    assert t == 5
    assert floor_sum(record, (1, 2), (1, 1), t) <= -1


def test_floor_sum_uses_floor_not_truncation(record):
    # lambda_0 = -17 contributes floor(-17/8) = -3 at t=1
    assert floor_sum(record, (1,), (0,), 1) == 0 + 0 + (-17 // 8)


def test_floor_sum_length_mismatch(record):
    with pytest.raises(ValueError):
        floor_sum(record, (1, 2), (1,), 0)


@given(st.integers(0, 10**4), st.integers(-50, 50))
def test_floor_sum_periodic(seed, t):
    c = random_curves(1, seed=seed)[0]
    places = c.totally_ramified_places()
    if not places:
        return
    sel = places[: 2]
    a = [(seed * (i + 3)) % (2 * c.m) for i in range(len(sel))]
    assert floor_sum(c, sel, a, t) == floor_sum(c, sel, a, t % c.m) == floor_sum(c, sel, a, t + c.m)


@pytest.mark.parametrize("m, r", [(8, 3), (3, 5), (9, 4)])
def test_floor_minus_examples(m, r):
    assert check_floor_minus(m, r)


def test_floor_minus_grid():
    assert all(check_floor_minus(m, r) for m in range(2, 40) for r in range(1, 40) if gcd(m, r) == 1)


def test_total_ramification(record):
    assert record.totally_ramified_places() == (0, 1, 2, 3)
    c = new_curve(8, [4, 3, 1])
    assert not c.is_totally_ramified(1)
    assert c.is_totally_ramified(INF) is False  # lambda_0 = -8
    with pytest.raises(PlaceError):
        selection(c, (1, 2))


def test_selection_rules(record):
    assert selection(record, [2, 0]) == (2, 0)
    with pytest.raises(PlaceError):
        selection(record, [1, 1])
    with pytest.raises(PlaceError):
        selection(record, [4])
    with pytest.raises(PlaceError):
        selection(record, [])


def test_place_tokens():
    assert parse_place("inf") == INF
    assert parse_place(" 3 ") == 3
    assert place_label(INF) == "inf"
    for bad in ("0", "-1", "x"):
        with pytest.raises(PlaceError):
            parse_place(bad)
