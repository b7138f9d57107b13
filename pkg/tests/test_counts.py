import math

import pytest
from hypothesis import given, settings, strategies as st

from aqc.counts import (
    aqc_row, binomial, column_step, count_aqc, count_aqc_recurrence,
    count_aqc_rencontres, count_free, count_multi, count_one_aqc_relation,
    count_table, factorial, free_bounds, free_recurrence, free_sequence,
    multi_distribution, recurrence_table, restricted_derangements,
)
from aqc.errors import ConsistencyError

# The q = 5 table, rows n = 0..13.
Q5_TABLE = [
    [1], [1], [2], [6], [24], [119, 1], [718, 2], [5034, 6], [40296, 24],
    [362760, 120], [3628081, 718, 1], [39911763, 5034, 3],
    [478961292, 40296, 12], [6226657980, 362760, 60],
]

# Frozen from a standalone brute-force count over S_n (itertools.permutations,
# cycles walked from their minimum), independent of the package code.
BRUTE = {
    ("a", 7, 1, 3): 114,
    ("a", 9, 2, 2): 2190,
    ("a", 8, 1, 3): 696,
    ("a", 9, 1, 2): 35620,
    ("b", 8, 3): 39612,
    ("b", 6, 2): 611,
    ("b", 4, 1): 9,
    ("r", 6, 1): [265, 264, 135, 40, 15, 0, 1],
    ("r", 7, 2): [4376, 612, 48, 4],
    ("free12", 6): 225,
    ("free12", 5): 36,
}


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (7, 0, 1), (4, 7, 0), (4, -1, 0)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_factorial_is_exact():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(13) == 6227020800


@pytest.mark.parametrize("n,k,q,expected", [
    (3, 1, 2, 2),
    (3, 0, 2, 4),
    (13, 2, 5, 60),
    (10, 0, 5, 3628081),
    (0, 0, 4, 1),
    (7, 1, 3, BRUTE[("a", 7, 1, 3)]),
    (9, 2, 2, BRUTE[("a", 9, 2, 2)]),
])
def test_count_aqc_examples(n, k, q, expected):
    assert count_aqc(n, k, q) == expected


def test_q5_table():
    assert [aqc_row(n, 5) for n in range(14)] == Q5_TABLE
    table = count_table(13, 5)
    assert table[13, 0] == 6226657980
    assert table[11, 2] == 3
    assert table[4, 3] == 0


def test_counts_vanish_above_floor():
    assert count_aqc(9, 2, 5) == 0
    assert count_aqc(4, 5, 1) == 0


def test_zero_cycle_length_rejected():
    with pytest.raises(ValueError):
        count_aqc(3, 0, 0)
    with pytest.raises(ValueError):
        count_free(3, 0)


def test_count_free():
    assert count_free(5, 5) == 119
    assert count_free(4, 1) == BRUTE[("b", 4, 1)]
    assert count_free(0, 3) == 1
    assert count_free(6, 2) == BRUTE[("b", 6, 2)]


def test_rencontres():
    assert count_aqc_rencontres(6, 6) == 1
    assert count_aqc_rencontres(6, 5) == 0
    assert count_aqc_rencontres(6, 2) == count_aqc(6, 2, 1) == BRUTE[("r", 6, 1)][2]
    assert [count_aqc_rencontres(6, k) for k in range(7)] == BRUTE[("r", 6, 1)]


def test_column_step_examples():
    assert column_step(5, 1, 5) == 120 == Q5_TABLE[9][1]
    assert column_step(6, 1, 5) == 718 == Q5_TABLE[10][1]
    assert column_step(8, 2, 2) == count_aqc(9, 2, 2)


def test_column_step_needs_positive_k():
    with pytest.raises(ValueError):
        column_step(5, 0, 5)


def test_column_step_flags_inexact_division(monkeypatch):
    import aqc.counts as counts
    monkeypatch.setattr(counts, "count_aqc", lambda n, k, q: 7)
    with pytest.raises(ConsistencyError):
        counts.column_step(4, 2, 3)


def test_one_cycle_relation():
    assert count_one_aqc_relation(10, 5) == 120
    assert count_one_aqc_relation(12, 5) == 5034 == Q5_TABLE[11][1]
    assert count_one_aqc_relation(9, 3) == count_aqc(8, 1, 3) == BRUTE[("a", 8, 1, 3)]


def test_free_recurrence_examples():
    assert free_recurrence(5, 5) == 5 * 24 + 4 * 1 - 5 == 119
    assert free_recurrence(8, 3) == count_free(8, 3) == BRUTE[("b", 8, 3)]
    d = free_sequence(20, 1)
    assert all(d[n] - n * d[n - 1] == (-1) ** n for n in range(1, 21))


def test_homogeneous_recurrence_examples():
    assert count_aqc_recurrence(6, 2, 3) == 1
    assert count_aqc_recurrence(6, 1, 3) == 22
    assert count_aqc_recurrence(9, 1, 2) == count_aqc(9, 1, 2) == BRUTE[("a", 9, 1, 2)]


@pytest.mark.parametrize("q", range(1, 7))
def test_routes_agree_to_30(q):
    rows = [aqc_row(n, q) for n in range(31)]
    assert recurrence_table(30, q) == rows
    assert free_sequence(60, q) == [count_free(n, q) for n in range(61)]
    for n in range(31):
        for k in range(1, (n + q - 1) // q + 1):
            assert column_step(n, k, q) == count_aqc(n + q - 1, k, q)


def test_row_sums_are_factorials():
    for n in range(11):
        for q in range(1, n + 1):
            assert sum(aqc_row(n, q)) == math.factorial(n)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 40), q=st.integers(1, 8))
def test_row_sum_property(n, q):
    assert sum(aqc_row(n, q)) == math.factorial(n)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 40), q=st.integers(1, 8))
def test_total_adjacent_cycles(n, q):
    # each of the n+1-q adjacent q-cycles sits in (n-q)! permutations
    total = sum(k * v for k, v in enumerate(aqc_row(n, q)))
    assert total == ((n + 1 - q) * math.factorial(n - q) if n >= q else 0)


def test_multi_examples():
    lengths = (1, 2, 3, 4, 5)
    assert count_multi(5, lengths, (0, 2, 0, 0, 0)) == 0
    assert count_multi(5, lengths, (1, 2, 0, 0, 0)) == 3
    assert count_multi(5, lengths, (0, 0, 1, 0, 0)) == 1
    assert count_multi(5, lengths, (0, 0, 0, 0, 1)) == 1
    assert count_multi(6, (1, 2), (0, 0)) == BRUTE[("free12", 6)]


def test_multi_rejects_bad_lengths():
    for bad in [(), (2, 2), (3, 1), (0, 1)]:
        with pytest.raises(ValueError):
            count_multi(4, bad, (0,) * len(bad))
    with pytest.raises(ValueError):
        count_multi(4, (1, 2), (0,))


def test_multi_zero_when_too_many_cycles():
    assert count_multi(5, (2, 3), (1, 2)) == 0


@pytest.mark.parametrize("q", range(1, 6))
def test_multi_single_length_matches_closed_form(q):
    for n in range(12):
        for k in range(n // q + 2):
            assert count_multi(n, (q,), (k,)) == count_aqc(n, k, q)


def test_multi_totals():
    import itertools
    subsets = [s for r in range(1, 5) for s in itertools.combinations(range(1, 5), r)]
    for n in range(9):
        for lengths in subsets:
            assert sum(multi_distribution(n, lengths).values()) == math.factorial(n)


def test_restricted_derangements():
    for n in range(9):
        assert restricted_derangements(n, 1) == count_free(n, 1)
    assert restricted_derangements(5, 2) == BRUTE[("free12", 5)]
    assert restricted_derangements(6, 2) == BRUTE[("free12", 6)]
    assert restricted_derangements(0, 3) == 1
    with pytest.raises(ValueError):
        restricted_derangements(4, 0)


def test_free_bounds():
    assert free_bounds(5, 5) == (119, 120)
    lo, hi = free_bounds(6, 2)
    assert (lo, hi) == (600, 720)
    assert lo <= count_free(6, 2) <= hi
    for q in range(2, 8):
        assert free_bounds(q, q) == (math.factorial(q) - 1, math.factorial(q))
    with pytest.raises(ValueError):
        free_bounds(5, 1)


def test_free_bounds_hold_to_40():
    for q in range(2, 41):
        for n in range(q, 41):
            lo, hi = free_bounds(n, q)
            assert lo <= count_free(n, q) <= hi
