import math

import pytest
from hypothesis import given, strategies as st

from permlab.bounds import (
    CSV_HEADER,
    i_h,
    lower_bound,
    sandwich_report,
    upper_bound,
    upper_bound_extended,
    w_h_direct,
)
from permlab.labels import CapError, build_collision_table
from permlab.numtheory import m_index
from permlab.witness import WitnessConfig


def brute_w(n, h):
    """Scan every i in 3..n without early exit."""
    return {math.perm(i, h) for i in range(3, n + 1) if i > h and 3 <= math.perm(i, h) <= n}


def brute_i_h(n, h):
    good = [i for i in range(h + 1, n + 1) if math.perm(i, h) <= n]
    return max(good) if good else h


@pytest.mark.parametrize("n,h,expected", [(20, 2, 5), (7, 2, 3), (10, 3, 3)])
def test_i_h(n, h, expected):
    assert i_h(n, h) == expected


@pytest.mark.parametrize("n,h,expected", [(20, 2, {6, 12, 20}), (7, 2, {6}), (10, 3, set())])
def test_w_h_direct(n, h, expected):
    assert w_h_direct(n, h) == expected


@given(st.integers(3, 700), st.integers(2, 6))
def test_w_h_and_i_h_against_scan(n, h):
    assert w_h_direct(n, h) == brute_w(n, h)
    assert i_h(n, h) == brute_i_h(n, h)
    assert len(w_h_direct(n, h)) == i_h(n, h) - h


@pytest.mark.parametrize("n,expected", [(6, 15), (7, 20), (20, 187), (5, 10)])
def test_upper_bound(n, expected):
    assert upper_bound(n) == expected


def test_upper_bound_properties():
    for n in range(2, 400):
        full = n * (n - 1) // 2
        w_sum = sum(i_h(n, h) - h for h in range(2, m_index(n)))
        assert upper_bound(n) <= full
        assert (upper_bound(n) == full) == (w_sum == 0)
        assert upper_bound_extended(n) <= upper_bound(n)


def test_upper_bound_extended_picks_up_larger_h():
    # m_24 = 3 leaves out h = 3, yet 24 = P(4, 3)
    assert upper_bound(24) == 24 * 23 // 2 - (i_h(24, 2) - 2)
    assert upper_bound_extended(24) == upper_bound(24) - 1


@pytest.mark.parametrize("n,config,expected", [(6, WitnessConfig(2), 13), (6, WitnessConfig(3), 12),
                                                (3, WitnessConfig(2), 3)])
def test_lower_union(n, config, expected):
    assert lower_bound(n, config)[1] == expected


def test_lower_formula_n6():
    # printed S1 summand is 2 short at n = 6: 6 + 1 (S2) + 3 (S4uS5) + 0 + 2 (S6) - 1
    assert lower_bound(6)[0] == 11


@pytest.mark.parametrize("n,lower,exact,upper", [(6, 13, 13, 15), (7, None, 19, 20), (5, None, 10, 10)])
def test_sandwich_report(n, lower, exact, upper):
    rep = sandwich_report(n)
    assert rep.exact == exact and rep.upper == upper
    if lower is not None:
        assert rep.lower_union == lower
    assert rep.sandwich_holds


def test_sandwich_report_n6_flags_equality():
    assert sandwich_report(6).lower_equals_exact
    assert not sandwich_report(7).lower_equals_exact


def test_sandwich_report_cap():
    with pytest.raises(CapError):
        sandwich_report(301)
    assert sandwich_report(301, with_exact=False).exact is None


def test_csv_row_shape():
    rep = sandwich_report(6)
    row = rep.csv_row()
    assert len(row) == len(CSV_HEADER)
    assert row == [6, 11, 13, 1, 15, 13, 8, 1, 0, 3, 2, "smin2-loose"]


def test_upper_counts_real_collisions():
    # every W_h element really is a collision in the table
    for n in (7, 30, 130):
        table = build_collision_table(n)
        for h in range(2, m_index(n)):
            for k in w_h_direct(n, h):
                members = {(p.low, p.high) for p in table.classes[k]}
                assert (1, k) in members
                assert any(low == h for low, _ in members)
