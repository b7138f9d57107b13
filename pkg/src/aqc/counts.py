"""Exact counts of permutations by their number of adjacent q-cycles.

An adjacent q-cycle is a cycle ``(a, a+1, ..., a+q-1)`` in the standard cycle
form of a permutation of ``{1..n}``.  ``a(n, k)`` below always means the number
of permutations of ``{1..n}`` with exactly ``k`` of them (``q`` fixed), and
``b_n = a(n, 0)``.

Every routine works on Python integers, so there is no overflow and no
rounding.  Several independent routes to the same numbers are provided
(closed form, column relation, two recurrences, multi-length formula) so they
can be checked against each other and against :mod:`aqc.oracle`.

>>> [count_aqc(13, k, 5) for k in range(3)]
[6226657980, 362760, 60]
>>> count_free(4, 1)
9
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ConsistencyError

__all__ = [
    "binomial", "factorial",
    "count_aqc", "count_free", "count_aqc_rencontres", "aqc_row",
    "column_step", "count_one_aqc_relation",
    "free_recurrence", "free_sequence",
    "count_aqc_recurrence", "recurrence_table",
    "count_multi", "multi_distribution", "restricted_derangements",
    "free_bounds", "CountTable", "count_table", "validate_lengths",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def _check_q(q: int) -> None:
    if q < 1:
        raise ValueError(f"cycle length q must be >= 1, got {q}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def count_aqc(n: int, k: int, q: int) -> int:
    """Number of permutations of {1..n} with exactly ``k`` adjacent q-cycles.

    Evaluated by the alternating inclusion-exclusion sum over ``j = k..n//q``
    of ``(-1)^(k+j) C(j, k) (n-(q-1)j)! / j!``.

    >>> count_aqc(3, 1, 2), count_aqc(10, 0, 5), count_aqc(0, 0, 4)
    (2, 3628081, 1)
    """
    _check_q(q)
    _check_n(n)
    r = n // q
    if k < 0 or k > r:
        return 0
    total = 0
    for j in range(k, r + 1):
        # (n-(q-1)j) >= j because qj <= n, so the quotient is exact
        term = math.comb(j, k) * (math.factorial(n - (q - 1) * j) // math.factorial(j))
        total += _sign(k + j) * term
    if total < 0:
        raise ConsistencyError(f"a({n},{k}) came out negative for q={q}: {total}")
    return total


def count_free(n: int, q: int) -> int:
    """Number of permutations of {1..n} with no adjacent q-cycle.

    For ``q = 1`` these are the derangement numbers.
    """
    return count_aqc(n, 0, q)


def count_aqc_rencontres(n: int, k: int) -> int:
    """Fixed-point counts as ``C(n, k) * d_(n-k)``; agrees with ``count_aqc(n, k, 1)``."""
    _check_n(n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k) * count_free(n - k, 1)


def aqc_row(n: int, q: int) -> list[int]:
    """The row ``[a(n,0), ..., a(n, n//q)]``."""
    _check_q(q)
    return [count_aqc(n, k, q) for k in range(n // q + 1)]


def column_step(n: int, k: int, q: int) -> int:
    """``a(n+q-1, k)`` obtained from ``a(n, k-1)`` by the column relation.

    The relation divides by ``k``; a nonzero remainder raises
    :class:`ConsistencyError`.

    >>> column_step(5, 1, 5)
    120
    """
    _check_q(q)
    _check_n(n)
    if k < 1:
        raise ValueError(f"column_step needs k >= 1, got {k}")
    numerator = count_aqc(n, k - 1, q)
    if n % q == 0:
        m = n // q
        numerator += _sign(k + m) * binomial(m, k - 1)
    value, rem = divmod(numerator, k)
    if rem:
        raise ConsistencyError(
            f"column relation not divisible: n={n}, k={k}, q={q}, numerator={numerator}")
    return value


def count_one_aqc_relation(n: int, q: int) -> int:
    """``a(n-1, 1)`` expressed through ``b_(n-q)``."""
    _check_q(q)
    if n < q:
        raise ValueError(f"need n >= q, got n={n}, q={q}")
    value = count_free(n - q, q)
    if n % q == 0:
        value += _sign(n // q)
    return value


def free_sequence(n_max: int, q: int) -> list[int]:
    """``[b_0, ..., b_n_max]`` by the first-order recurrence in ``n``.

    Rows below ``q`` are seeded from :func:`count_free`; from ``n = q`` on,
    ``b_n = n b_(n-1) + (q-1) b_(n-q)`` plus ``q (-1)^(n/q)`` when ``q | n``.
    """
    _check_q(q)
    _check_n(n_max)
    b = [count_free(m, q) for m in range(min(q, n_max + 1))]
    for m in range(len(b), n_max + 1):
        value = m * b[m - 1] + (q - 1) * b[m - q]
        if m % q == 0:
            value += q * _sign(m // q)
        b.append(value)
    return b


def free_recurrence(n: int, q: int) -> int:
    return free_sequence(n, q)[n]


def recurrence_table(n_max: int, q: int) -> list[list[int]]:
    """Rows ``0..n_max`` of ``a(n, k)`` built by the homogeneous recurrence.

    Column 0 comes from :func:`free_sequence`; for ``k >= 1`` row ``m+1`` uses

        a(m+1,k) = a(m-q+1,k-1) + (m-qk+1) a(m,k) - a(m-q+1,k) + q(k+1) a(m,k+1)

    with out-of-range entries read as zero.  Rows below ``q`` are seeded from
    the closed form (they are ``[m!]``).
    """
    _check_q(q)
    _check_n(n_max)
    free = free_sequence(n_max, q)
    rows: list[list[int]] = [aqc_row(m, q) for m in range(min(q, n_max + 1))]

    def at(m: int, j: int) -> int:
        if m < 0 or j < 0 or j > m // q:
            return 0
        return rows[m][j]

    for m in range(len(rows) - 1, n_max):
        new = [free[m + 1]]
        for k in range(1, (m + 1) // q + 1):
            s = m - q + 1
            new.append(at(s, k - 1) + (m - q * k + 1) * at(m, k)
                       - at(s, k) + q * (k + 1) * at(m, k + 1))
        rows.append(new)
    return rows


def count_aqc_recurrence(n: int, k: int, q: int) -> int:
    """``a(n, k)`` read off :func:`recurrence_table`."""
    _check_q(q)
    _check_n(n)
    if k < 0 or k > n // q:
        return 0
    return recurrence_table(n, q)[n][k]


def validate_lengths(lengths: Sequence[int]) -> tuple[int, ...]:
    lengths = tuple(lengths)
    if not lengths:
        raise ValueError("need at least one cycle length")
    if lengths[0] < 1 or any(a >= b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"lengths must be strictly increasing and >= 1, got {lengths}")
    return lengths


def _simplex(n: int, lengths: Sequence[int], lower: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All ``t`` with ``t_j >= lower_j`` and ``sum(q_j t_j) <= n``, nested loops."""
    m = len(lengths)
    t = [0] * m

    def rec(j: int, room: int) -> Iterator[tuple[int, ...]]:
        if j == m:
            yield tuple(t)
            return
        q = lengths[j]
        for tj in range(lower[j], room // q + 1):
            t[j] = tj
            yield from rec(j + 1, room - q * tj)

    if sum(q * k for q, k in zip(lengths, lower)) <= n:
        yield from rec(0, n)


def count_multi(n: int, lengths: Sequence[int], ks: Sequence[int]) -> int:
    """Permutations of {1..n} with exactly ``ks[j]`` adjacent ``lengths[j]``-cycles.

    >>> count_multi(5, (1, 2, 3, 4, 5), (1, 2, 0, 0, 0))
    3
    """
    _check_n(n)
    lengths = validate_lengths(lengths)
    ks = tuple(ks)
    if len(ks) != len(lengths):
        raise ValueError(f"{len(ks)} multiplicities for {len(lengths)} lengths")
    if any(k < 0 for k in ks):
        return 0
    if sum(q * k for q, k in zip(lengths, ks)) > n:
        return 0
    total = 0
    # terms with t_j < k_j vanish through C(t_j, k_j)
    for t in _simplex(n, lengths, ks):
        coeff = 1
        denom = 1
        for tj, kj in zip(t, ks):
            coeff *= math.comb(tj, kj)
            denom *= math.factorial(tj)
        top = math.factorial(n - sum((q - 1) * tj for q, tj in zip(lengths, t)))
        total += _sign(sum(ks) + sum(t)) * coeff * (top // denom)
    if total < 0:
        raise ConsistencyError(f"a({n}; {ks}) came out negative for lengths {lengths}")
    return total


def multi_distribution(n: int, lengths: Sequence[int]) -> dict[tuple[int, ...], int]:
    """All nonzero ``count_multi(n, lengths, ks)`` keyed by ``ks``."""
    lengths = validate_lengths(lengths)
    out = {}
    for ks in _simplex(n, lengths, [0] * len(lengths)):
        value = count_multi(n, lengths, ks)
        if value:
            out[ks] = value
    return out


def restricted_derangements(n: int, m: int) -> int:
    """Permutations with no adjacent cycle of any length ``1..m``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return count_multi(n, range(1, m + 1), (0,) * m)


def free_bounds(n: int, q: int) -> tuple[int, int]:
    """``(n! - (n+1-q)!, n!)``, which bracket ``b_n`` for ``q >= 2``."""
    if q < 2:
        raise ValueError(f"the bound is stated for q >= 2, got q={q}")
    if n < q:
        raise ValueError(f"need n >= q, got n={n}, q={q}")
    nf = math.factorial(n)
    return nf - math.factorial(n + 1 - q), nf


@dataclass(frozen=True)
class CountTable:
    """The triangle ``a(n, k)`` for one ``q``; ``rows[n][k]``."""
    q: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        row = self.rows[n]
        return row[k] if 0 <= k < len(row) else 0


def count_table(n_max: int, q: int) -> CountTable:
    _check_q(q)
    _check_n(n_max)
    return CountTable(q, tuple(tuple(aqc_row(n, q)) for n in range(n_max + 1)))
