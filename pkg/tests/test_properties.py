from math import gcd

from hypothesis import assume, given, settings, strategies as st

from kummergaps.closedform import pure_gaps_finite, pure_gaps_with_infinity_general
from kummergaps.curve import INF, new_curve
from kummergaps.gaps import gap_set, is_gap
from kummergaps.puregaps import full_pure_gap_set, is_pure_gap, is_pure_gap_oracle

nonzero = st.integers(-9, 9).filter(bool)
curves = st.builds(new_curve, st.integers(2, 9), st.lists(nonzero, min_size=1, max_size=6))


@st.composite
def curve_selection_tuple(draw):
    c = draw(curves)
    places = c.totally_ramified_places()
    assume(places)
    sel = draw(st.lists(st.sampled_from(places), min_size=1, max_size=min(3, len(places)), unique=True))
    a = draw(st.lists(st.integers(0, 3 * c.m), min_size=len(sel), max_size=len(sel)))
    return c, tuple(sel), tuple(a)


@settings(max_examples=400, deadline=None)
@given(curve_selection_tuple())
def test_criterion_agrees_with_oracle(case):
    c, sel, a = case
    assert is_pure_gap(c, sel, a) == is_pure_gap_oracle(c, sel, a)


@settings(max_examples=200, deadline=None)
@given(curve_selection_tuple())
def test_pure_gap_coordinates_are_gaps(case):
    c, sel, a = case
    if is_pure_gap(c, sel, a):
        assert all(is_gap(c, p, x) for p, x in zip(sel, a))
        assert all(x % c.m for x in a)


@settings(max_examples=200, deadline=None)
@given(curves)
def test_gap_set_self_check(c):
    for p in c.totally_ramified_places():
        g = gap_set(c, p, self_check=True)
        assert len(g) == c.genus
        assert all(is_pure_gap(c, (p,), (x,)) for x in g)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(2, 7), st.integers(1, 17), st.integers(1, 3))
def test_closed_forms_independent_of_lambda(m, r, lam, s):
    assume(gcd(r * lam, m) == 1 and s <= r)
    c = new_curve(m, [lam] * r)
    fin = tuple(range(1, s + 1))
    if s >= 2:
        assert pure_gaps_finite(m, r, s) == full_pure_gap_set(c, fin)
    if s <= 2:
        assert pure_gaps_with_infinity_general(m, r, s) == full_pure_gap_set(c, (INF,) + fin)
