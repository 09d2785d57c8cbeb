"""Brute-force enumeration: counts, statistics, rendering, series cross-check."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overpoly.enumerator import (Overpartition, PartConfig, count_series,
                                 enumerate_overpartitions, overline_histogram,
                                 plain_part_histogram, s_histogram, s_statistic,
                                 stats, weight_poly)
from overpoly.polyring import MultiPoly

B2 = PartConfig(b=2, lam=2)

# Known counts for doubly-restricted binary overpartitions (lambda = b = 2).
COUNTS_B2 = [1, 2, 4, 5, 8, 10, 13, 14, 18, 21, 26]


def test_config_validation():
    with pytest.raises(ValueError):
        PartConfig(b=1, lam=1)
    with pytest.raises(ValueError):
        PartConfig(b=2, lam=0)


def test_counts_match_known_values():
    for n, expected in enumerate(COUNTS_B2):
        assert len(enumerate_overpartitions(B2, n)) == expected


def test_enumeration_of_3_explicit():
    got = {p.render(2) for p in enumerate_overpartitions(B2, 3)}
    assert got == {"(~2,~1)", "(~2,1)", "(2,~1)", "(2,1)", "(~1,1,1)"}


def test_objects_are_distinct_and_sum_to_n():
    for n in range(9):
        objs = enumerate_overpartitions(B2, n)
        assert len(set(objs)) == len(objs)
        assert all(p.value(2) == n for p in objs)


def test_multiplicity_restriction_enforced():
    for n in range(12):
        for p in enumerate_overpartitions(B2, n):
            for _exp, over, plain in p.entries:
                assert over in (0, 1)
                assert 0 <= plain <= 2
                assert over + plain >= 1


def test_parts_ordering():
    p = Overpartition(((2, 1, 1), (0, 0, 2)))
    assert p.parts(2) == [(4, True), (4, False), (1, False), (1, False)]


def test_render_compact():
    p = Overpartition(((1, 1, 2),))
    assert p.render(2) == "(~2,2,2)"
    assert p.render(2, compact=True) == "(~2,2^2)"
    assert Overpartition(()).render(2) == "()"


def test_count_series_matches_enumeration():
    assert count_series(B2, 10) == COUNTS_B2
    cfg3 = PartConfig(b=3, lam=3)
    assert count_series(cfg3, 8) == [
        len(enumerate_overpartitions(cfg3, n)) for n in range(9)]


def test_stats_example():
    # ~4, 2, 2, ~1: one overline pair member at 4 and 1, one plain 2-tuple.
    p = Overpartition(((2, 1, 0), (1, 0, 2), (0, 1, 0)))
    s = stats(p, B2)
    assert (s.i, s.j) == (2, (0, 1))


def test_weight_poly_small():
    # n = 1: ~1 contributes x, plain 1 contributes y_1.
    assert weight_poly(B2, 1) == MultiPoly(3, {(1, 0, 0): 1, (0, 1, 0): 1})
    # n = 2: ~2, 2, ~1+1, 1+1.
    assert weight_poly(B2, 2) == MultiPoly(
        3, {(1, 0, 0): 1, (0, 1, 0): 1, (1, 1, 0): 1, (0, 0, 1): 1})


def test_weight_poly_requires_lambda_eq_b():
    with pytest.raises(ValueError):
        weight_poly(PartConfig(b=2, lam=3), 1)


def test_weight_poly_counts_all_objects():
    for n in range(8):
        w = weight_poly(B2, n)
        assert w.eval_rational([1, 1, 1]) == COUNTS_B2[n]


def test_s_statistic_and_histogram():
    # For b = 2 the S statistic counts overlines plus all plain runs.
    p = Overpartition(((1, 1, 2), (0, 0, 1)))
    assert s_statistic(p, B2) == 3
    hist = s_histogram(B2, 2)
    assert sum(hist.values()) == COUNTS_B2[2]
    assert all(v >= 1 for v in hist.values())


def test_overline_histogram():
    hist = overline_histogram(B2, 3)
    assert sum(hist.values()) == COUNTS_B2[3]
    # (2,1) is the only overline-free overpartition of 3.
    assert hist[0] == 1


def test_plain_part_histogram_modes():
    dist = plain_part_histogram(B2, 4, distinct=True)
    mult = plain_part_histogram(B2, 4, distinct=False)
    assert sum(dist.values()) == sum(mult.values()) == COUNTS_B2[4]
    # With multiplicity the plain-part count can reach 3 (e.g. 2+1+1);
    # distinct values cap at 2 (powers 1 and 2).
    assert max(mult) >= 3 > max(dist)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(0, 14))
def test_series_agrees_with_enumeration(b, n):
    cfg = PartConfig(b=b, lam=b)
    assert count_series(cfg, n)[n] == len(enumerate_overpartitions(cfg, n))
