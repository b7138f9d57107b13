"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.  All comparisons are exact integer or
rational equalities; the time budgets are asserted as stated.
"""

import itertools
import json
import math
import time
from fractions import Fraction

import pytest

from aqc import oracle
from aqc.cli import main
from aqc.counts import (
    aqc_row, column_step, count_aqc, count_aqc_rencontres, count_free,
    count_multi, free_bounds, free_sequence, multi_distribution, recurrence_table,
)
from aqc.permanent import generating_polynomial, multi_generating_polynomial, rencontres_polynomial
from aqc.poly import MPoly
from aqc.series import RatSeries, egf_series, ogf_series, verify_egf_ode, verify_ogf_ode

criterion = pytest.mark.criterion

Q5_ROWS = [
    [1], [1], [2], [6], [24], [119, 1], [718, 2], [5034, 6], [40296, 24],
    [362760, 120], [3628081, 718, 1], [39911763, 5034, 3],
    [478961292, 40296, 12], [6226657980, 362760, 60],
]

PAPER_F = {
    (0, 0, 0, 0, 0): 34, (1, 0, 0, 0, 0): 34, (0, 1, 0, 0, 0): 6,
    (0, 0, 1, 0, 0): 1, (0, 0, 0, 0, 1): 1, (2, 0, 0, 0, 0): 17,
    (1, 1, 0, 0, 0): 6, (1, 0, 0, 1, 0): 2, (0, 1, 1, 0, 0): 2,
    (3, 0, 0, 0, 0): 6, (1, 2, 0, 0, 0): 3, (2, 0, 1, 0, 0): 3,
    (3, 1, 0, 0, 0): 4, (5, 0, 0, 0, 0): 1,
}


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


@criterion(1, "q=5 triangle from the CLI, n=0..13, exact, <1 s")
def test_q5_table(capsys):
    with Timer() as t:
        code = main(["triangle", "--q", "5", "--n", "13", "--format", "json"])
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert code == 0
    assert rows == Q5_ROWS
    assert rows[10][0] == 3628081 and rows[11][2] == 3
    assert rows[13] == [6226657980, 362760, 60]
    assert t.elapsed < 1.0


@criterion(2, "generating_polynomial(6, 3) = 697 + 22x + x^2, <1 s")
def test_single_length_permanent():
    x = MPoly.var("x")
    with Timer() as t:
        g = generating_polynomial(6, 3)
    assert g == 697 + 22 * x + x ** 2
    assert t.elapsed < 1.0


@criterion(3, "five-length permanent for n=5 equals the 14-term polynomial, sum 120, <1 s")
def test_multi_length_permanent():
    names = ["x", "y", "z", "u", "v"]
    with Timer() as t:
        p = multi_generating_polynomial(5, (1, 2, 3, 4, 5))
    got = {tuple(dict(key).get(g, 0) for g in names): c for key, c in p.as_dict().items()}
    assert got == PAPER_F
    assert p.evaluate(dict.fromkeys(names, 1)) == 120
    assert t.elapsed < 1.0


@criterion(4, "closed form equals enumeration: n<=8 all q, n=9,10 for q in 1..3, <60 s")
def test_oracle_equivalence():
    oracle._profile_cached.cache_clear()
    with Timer() as t:
        for n in range(9):
            for q in range(1, n + 1):
                assert aqc_row(n, q) == oracle.oracle_distribution(n, q), (n, q)
        for n in (9, 10):
            for q in (1, 2, 3):
                assert aqc_row(n, q) == oracle.oracle_distribution(n, q), (n, q)
    assert t.elapsed < 60.0


@criterion(5, "both recurrences and the column relation equal the closed form, n<=30, q<=6, <5 s")
def test_route_agreement():
    with Timer() as t:
        for q in range(1, 7):
            rows = [aqc_row(n, q) for n in range(31)]
            assert free_sequence(30, q) == [r[0] for r in rows]
            assert recurrence_table(30, q) == rows
            for n in range(31):
                for k in range(1, (n + q - 1) // q + 1):
                    # column_step raises if its division by k is inexact
                    assert column_step(n, k, q) == count_aqc(n + q - 1, k, q)
    assert t.elapsed < 5.0


@criterion(6, "rencontres identity for n<=12 and the rencontres permanent for n<=7")
def test_rencontres():
    for n in range(13):
        d = [count_free(m, 1) for m in range(n + 1)]
        for k in range(n + 1):
            assert count_aqc(n, k, 1) == math.comb(n, k) * d[n - k] == count_aqc_rencontres(n, k)
    for n in range(1, 8):
        assert rencontres_polynomial(n).coefficients("x") == aqc_row(n, 1)


@criterion(7, "OGF and EGF equations have exactly zero residuals at N=30, q=1..6, <5 s")
def test_generating_function_equations():
    with Timer() as t:
        for q in range(1, 7):
            ogf = verify_ogf_ode(q, 30)
            egf = verify_egf_ode(q, 30)
            assert ogf.order >= 29 and ogf.is_zero(), q
            assert egf.order >= 30 - q - 1 and egf.is_zero(), q
        # q = 1 specialisations written out independently
        g = ogf_series(1, 30)
        res = (RatSeries.polynomial({2: 1, 3: 1}, 31) * g.derive()
               - RatSeries.polynomial({0: 1, 2: -1}, 31) * g
               + RatSeries.polynomial({0: 1}, 31))
        assert res.is_zero()
        exp_neg = RatSeries(Fraction((-1) ** i, math.factorial(i)) for i in range(31))
        geometric = RatSeries([1] * 31)
        assert egf_series(1, 30) == exp_neg * geometric
    assert t.elapsed < 5.0


@criterion(8, "n! - (n+1-q)! <= b_n <= n! for 2<=q<=n<=40; total-cycle identity vs enumeration")
def test_free_bound_and_total_identity():
    for q in range(2, 41):
        for n in range(q, 41):
            lo, hi = free_bounds(n, q)
            assert lo == math.factorial(n) - math.factorial(n + 1 - q) and hi == math.factorial(n)
            assert lo <= count_free(n, q) <= hi
    for n in range(1, 10):
        for q in range(1, n + 1):
            dist = oracle.oracle_distribution(n, q)
            assert sum(k * v for k, v in enumerate(dist)) == (n + 1 - q) * math.factorial(n - q)
            assert dist == aqc_row(n, q)


@criterion(9, "multi-length totals, single-length degeneration, and enumeration key by key")
def test_multi_length_consistency():
    subsets = [s for r in range(1, 5) for s in itertools.combinations(range(1, 5), r)]
    for n in range(9):
        for lengths in subsets:
            assert sum(multi_distribution(n, lengths).values()) == math.factorial(n)
        for q in range(1, 5):
            for k in range(n // q + 1):
                assert count_multi(n, (q,), (k,)) == count_aqc(n, k, q)
    for n in range(8):
        for lengths in subsets:
            want = oracle.oracle_multi(n, lengths)
            got = multi_distribution(n, lengths)
            assert got == want, (n, lengths)
