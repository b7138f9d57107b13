"""Brute-force ground truth: enumerate S_n and count adjacent cycles directly.

Permutations are one-line tuples of the values ``1..n``; ``p[i]`` is the image
of ``i + 1``.  Cycles are tuples written smallest element first, and a cycle
form lists cycles by increasing minimum.

The enumerators walk all ``n!`` permutations in lexicographic order, split by
first entry so the pieces can run in separate processes.  One pass records,
for every permutation, how many adjacent cycles of *each* length it has; the
single-length and multi-length distributions are both marginals of that
profile, which is cached per ``n``.
"""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Sequence

from .counts import validate_lengths
from .errors import EnumerationLimitError

__all__ = [
    "DEFAULT_CAP", "cycle_decomposition", "compose_cycles", "is_adjacent_cycle",
    "count_adjacent_cycles", "adjacent_profile", "oracle_distribution",
    "oracle_multi", "parse_one_line", "format_cycles",
]

DEFAULT_CAP = 10


def parse_one_line(s: str) -> tuple[int, ...]:
    """``"432157869"`` -> ``(4, 3, 2, 1, 5, 7, 8, 6, 9)``; single digits only."""
    return tuple(int(ch) for ch in s)


def _check_perm(p: Sequence[int]) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {tuple(p)}")


def cycle_decomposition(p: Sequence[int]) -> list[tuple[int, ...]]:
    """Standard cycle form of a one-line permutation.

    >>> cycle_decomposition((5, 3, 2, 1, 4, 6))
    [(1, 5, 4), (2, 3), (6,)]
    """
    _check_perm(p)
    n = len(p)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p[j - 1]
        cycles.append(tuple(cycle))
    return cycles


def compose_cycles(cycles: Sequence[Sequence[int]], n: int | None = None) -> tuple[int, ...]:
    """Inverse of :func:`cycle_decomposition`."""
    if n is None:
        n = sum(len(c) for c in cycles)
    image = list(range(1, n + 1))
    for c in cycles:
        for idx, a in enumerate(c):
            image[a - 1] = c[(idx + 1) % len(c)]
    return tuple(image)


def format_cycles(cycles: Sequence[Sequence[int]]) -> str:
    sep = "" if all(x < 10 for c in cycles for x in c) else ","
    return "".join("(" + sep.join(map(str, c)) + ")" for c in cycles)


def is_adjacent_cycle(c: Sequence[int]) -> bool:
    """True iff the cycle, minimum first, reads ``a, a+1, ..., a+q-1``."""
    a = c[0]
    return all(x == a + i for i, x in enumerate(c))


def count_adjacent_cycles(p: Sequence[int], q: int) -> int:
    if q < 1:
        raise ValueError(f"cycle length q must be >= 1, got {q}")
    return sum(1 for c in cycle_decomposition(p) if len(c) == q and is_adjacent_cycle(c))


def _profile_of(p: Sequence[int], n: int) -> tuple[int, ...]:
    # p is 0-based; walks cycles from their minimum, same as cycle_decomposition
    seen = [False] * n
    counts = [0] * n
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        adjacent = True
        while not seen[j]:
            seen[j] = True
            nxt = p[j]
            if nxt != j + 1 and nxt != i:
                adjacent = False
            j = nxt
            length += 1
        if adjacent:
            counts[length - 1] += 1
    return tuple(counts)


def _tally_block(n: int, first: int) -> Counter:
    """Profiles of all permutations (0-based) whose first entry is ``first``."""
    rest = [v for v in range(n) if v != first]
    tally: Counter = Counter()
    for tail in itertools.permutations(rest):
        tally[_profile_of((first,) + tail, n)] += 1
    return tally


def _check_cap(n: int, cap: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise EnumerationLimitError(
            f"refusing to enumerate S_{n} ({math.factorial(n)} permutations); cap is n={cap}")


@lru_cache(maxsize=None)
def _profile_cached(n: int, workers: int) -> dict[tuple[int, ...], int]:
    if n == 0:
        return {(): 1}
    total: Counter = Counter()
    if workers > 1 and n >= 7:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_tally_block, [n] * n, range(n)):
                total.update(part)
    else:
        for first in range(n):
            total.update(_tally_block(n, first))
    return dict(total)


def adjacent_profile(n: int, cap: int = DEFAULT_CAP,
                     workers: int | None = None) -> dict[tuple[int, ...], int]:
    """Joint tally over S_n of adjacent-cycle counts for every length ``1..n``.

    Keys are tuples ``c`` of length ``n`` with ``c[L-1]`` the number of
    adjacent ``L``-cycles; values are how many permutations have that profile.
    """
    _check_cap(n, cap)
    if workers is None:
        workers = min(n, os.cpu_count() or 1)
    return dict(_profile_cached(n, max(1, workers)))


def oracle_distribution(n: int, q: int, cap: int = DEFAULT_CAP,
                        workers: int | None = None) -> list[int]:
    """``[a(n,0), ..., a(n, n//q)]`` by enumerating all of S_n.

    >>> oracle_distribution(6, 3)
    [697, 22, 1]
    """
    if q < 1:
        raise ValueError(f"cycle length q must be >= 1, got {q}")
    profile = adjacent_profile(n, cap, workers)
    dist = [0] * (n // q + 1)
    for key, count in profile.items():
        dist[key[q - 1] if q <= n else 0] += count
    return dist


def oracle_multi(n: int, lengths: Sequence[int], cap: int = DEFAULT_CAP,
                 workers: int | None = None) -> dict[tuple[int, ...], int]:
    """Joint distribution of adjacent-cycle counts for the given lengths.

    Keys are multiplicity vectors aligned with ``lengths``; absent keys mean 0.
    """
    lengths = validate_lengths(lengths)
    profile = adjacent_profile(n, cap, workers)
    out: Counter = Counter()
    for key, count in profile.items():
        out[tuple(key[q - 1] if q <= n else 0 for q in lengths)] += count
    return dict(out)
