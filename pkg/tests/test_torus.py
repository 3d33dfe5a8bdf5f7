from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from tunnel_atlas import (
    NotCoprimeError, OutOfRangeError, TrivialKnotError, cf_eval, cf_expand,
    depth_of_word, fibonacci_number, fibonacci_value, invariant_table,
    letter_sequence, normalize_cf, normalize_torus_params, semisimple_count,
    torus_depth, torus_depth_shortcut, torus_min_bridge,
)
from tunnel_atlas.torus import bridge_seeds, det


def naive_matmul(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


UP = [[1, 1], [0, 1]]
LOW = [[1, 0], [1, 1]]


@pytest.mark.parametrize("p, q, cf", [(41, 29, (1, 2, 2, 2, 2)), (3, 2, (1, 2)), (12, 5, (2, 2, 2))])
def test_cf_expand(p, q, cf):
    assert cf_expand(p, q) == cf
    assert cf_eval(cf) == (p, q)


def test_cf_eval_integer():
    assert cf_eval([2]) == (2, 1)


def test_cf_expand_errors():
    with pytest.raises(NotCoprimeError):
        cf_expand(4, 2)
    with pytest.raises(OutOfRangeError):
        cf_expand(5, 1)
    with pytest.raises(OutOfRangeError):
        cf_expand(5, 7)


def test_normalize_cf():
    assert normalize_cf([2, 1, 1]) == (2, 2)
    assert normalize_cf([1, 2, 2]) == (1, 2, 2)
    assert cf_eval(normalize_cf([3, 1, 4, 1])) == cf_eval([3, 1, 4, 1])


@given(st.integers(3, 5000), st.integers(2, 5000))
def test_cf_round_trip(p, q):
    if p <= q or gcd(p, q) != 1:
        return
    cf = cf_expand(p, q)
    assert cf[-1] >= 2
    assert all(t >= 1 for t in cf)
    assert cf_eval(cf) == (p, q)


def test_normalize_torus_params():
    assert normalize_torus_params(29, 41) == (41, 29, False)
    assert normalize_torus_params(41, -29) == (41, 29, True)
    assert normalize_torus_params(-41, -29) == (41, 29, False)
    with pytest.raises(NotCoprimeError):
        normalize_torus_params(4, 2)
    with pytest.raises(TrivialKnotError):
        normalize_torus_params(7, 1)
    with pytest.raises(TrivialKnotError):
        normalize_torus_params(0, 5)


def test_letter_sequence():
    assert "".join(letter_sequence([1, 2, 2, 2, 2])) == "LUULLUULL"
    assert "".join(letter_sequence([1, 2])) == "LUU"
    assert "".join(letter_sequence([2, 2, 2])) == "LLUULL"
    with pytest.raises(OutOfRangeError):
        letter_sequence([3])


def test_table_12_5_against_naive_products():
    table = invariant_table(12, 5)
    # A_{-2} A_{-1} A_0 A_1 A_2 = L L U U L, multiplied newest-on-the-left
    p0 = naive_matmul(UP, naive_matmul(LOW, LOW))
    p1 = naive_matmul(UP, p0)
    p2 = naive_matmul(LOW, p1)
    expected = [p0, p1, p2]
    for row, mat in zip(table.rows, expected):
        assert row.matrix == (mat[0][0], mat[0][1], mat[1][0], mat[1][1])
    assert [r.knot for r in table.rows] == [(5, 2), (7, 3), (12, 5)]
    assert [r.slope for r in table.rows] == [Fraction(1, 5), 9, 29]
    assert isinstance(table.rows[0].slope, Fraction)
    assert type(table.rows[1].slope) is int
    assert table.word.bits == "1"
    assert table.depth == 2


def test_table_41_29():
    table = invariant_table(41, 29)
    assert table.cf == (1, 2, 2, 2, 2)
    assert table.word.bits == "10101"
    assert table.depth == 4
    assert table.rows[-1].knot == (41, 29)
    assert table.cabling_count == 7
    assert len(table.word) == table.N - 1
    # first two cablings give the (3, 2) and (4, 3) torus knots
    assert [r.knot for r in table.rows[:2]] == [(3, 2), (4, 3)]


@pytest.mark.parametrize("n1", range(1, 8))
def test_first_cabling_only(n1):
    table = invariant_table(2 * n1 + 1, 2)
    assert len(table.rows) == 1
    assert table.rows[0].knot == (2 * n1 + 1, 2)
    assert table.rows[0].slope == Fraction(1, 2 * n1 + 1)
    assert table.word.bits == ""
    assert table.depth == 1


def test_mirror_negates_slopes_only():
    plain, mirror = invariant_table(41, 29), invariant_table(41, -29)
    assert mirror.mirrored and not plain.mirrored
    assert mirror.word == plain.word
    assert [r.slope for r in mirror.rows] == [-r.slope for r in plain.rows]
    assert invariant_table(29, 41).rows == plain.rows


def test_torus_depth():
    assert torus_depth(41, 29) == 4
    assert torus_depth(3, 2) == 1
    assert torus_depth(12, 5) == 2


def test_shortcut_conventions():
    assert torus_depth_shortcut([1, 2, 2, 2, 2], "literal") == 5
    assert torus_depth_shortcut([1, 2, 2, 2, 2], "offset") == 4
    assert torus_depth_shortcut([1, 2], "offset") == 1
    # offset misses when n_2 = 1: 5/3 = [1, 1, 2] has an empty word
    assert torus_depth_shortcut([1, 1, 2], "offset") == 2
    assert torus_depth(5, 3) == 1
    with pytest.raises(ValueError):
        torus_depth_shortcut([1, 2], "other")


def test_offset_shortcut_on_large_terms():
    # offset agrees whenever every term after n_1 is at least 2
    for p in range(3, 200):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            cf = cf_expand(p, q)
            if all(t >= 2 for t in cf[1:]):
                assert torus_depth_shortcut(cf, "offset") == torus_depth(p, q)


def test_table_invariants_sweep():
    for p in range(3, 120):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            table = invariant_table(p, q)
            assert all(det(r.matrix) == 1 for r in table.rows)
            assert table.rows[-1].knot == (p, q)
            assert table.rows[0].knot == (2 * table.cf[0] + 1, 2)
            assert all(r.slope % 2 == 1 for r in table.rows[1:])
            qs = [r.bridge_number for r in table.rows[1:]]
            assert all(x < y for x, y in zip(qs, qs[1:]))
            assert len(table.word) == max(table.N - 1, 0)
            assert table.depth == depth_of_word(table.word)


def test_bridge_cross_check_anchor():
    table = invariant_table(12, 5)
    assert semisimple_count(table.word) == 2
    assert bridge_seeds(table) == (2, 3)
    assert fibonacci_value(table.word, 2, 3) == 5


@pytest.mark.parametrize("d", range(1, 9))
def test_cheapest_descent_family(d):
    p, q = cf_eval([1] + [2] * d)
    assert torus_depth(p, q) == d
    assert q == torus_min_bridge(d)


@pytest.mark.parametrize("ones", range(2, 14))
def test_fastest_growth_family(ones):
    p, q = cf_eval(normalize_cf([2] + [1] * ones))
    table = invariant_table(p, q)
    assert min(p, q) == fibonacci_number(table.cabling_count + 2)


def test_literal_shortcut_off_by_one():
    # the literal block count always overshoots by exactly one
    for p in range(3, 150):
        for q in range(2, p):
            if gcd(p, q) == 1:
                cf = cf_expand(p, q)
                assert torus_depth_shortcut(cf, "literal") == torus_depth(p, q) + 1
