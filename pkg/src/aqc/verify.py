"""Cross-route consistency checks, grouped by scope.

Each ``check_*`` function returns a list of :class:`Check` results instead of
raising, so a caller can report every failure in one run.  The command line
``verify`` subcommand is a thin wrapper around :func:`run_scope`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable

from . import counts, oracle, permanent, series
from .errors import AqcError

__all__ = ["Check", "SCOPES", "run_scope", "check_oracle", "check_recurrences",
           "check_gf", "check_permanent", "check_multi"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _guard(name: str, fn: Callable[[], str | None]) -> Check:
    """Run ``fn``; a returned string is a failure description."""
    try:
        problem = fn()
    except AqcError as exc:
        return Check(name, False, f"{type(exc).__name__}: {exc}")
    return Check(name, problem is None, problem or "")


def _first_diff(got, want) -> str | None:
    if got == want:
        return None
    return f"got {got}, expected {want}"


def check_oracle(n_max: int = 8) -> list[Check]:
    out = []
    for n in range(n_max + 1):
        def body(n=n):
            for q in range(1, max(n, 1) + 1):
                want = oracle.oracle_distribution(n, q)
                got = counts.aqc_row(n, q)
                if got != want:
                    return f"q={q}: formula {got} vs enumeration {want}"
                if q >= 2 and n >= q:
                    total = sum(k * v for k, v in enumerate(want))
                    if total != (n + 1 - q) * math.factorial(n - q):
                        return f"q={q}: total adjacent cycles {total}"
            return None
        out.append(_guard(f"oracle n={n}", body))
    return out


def check_recurrences(n_max: int = 30, q_max: int = 6) -> list[Check]:
    out = []
    for q in range(1, q_max + 1):
        rows = [counts.aqc_row(n, q) for n in range(n_max + 1)]

        def free(q=q, rows=rows):
            return _first_diff(counts.free_sequence(n_max, q), [r[0] for r in rows])

        def homogeneous(q=q, rows=rows):
            return _first_diff(counts.recurrence_table(n_max, q), rows)

        def column(q=q, rows=rows):
            for n in range(n_max - q + 2):
                for k in range(1, (n + q - 1) // q + 1):
                    got = counts.column_step(n, k, q)
                    if got != counts.count_aqc(n + q - 1, k, q):
                        return f"n={n}, k={k}: {got}"
            for n in range(q, n_max + 2):
                if counts.count_one_aqc_relation(n, q) != counts.count_aqc(n - 1, 1, q):
                    return f"one-cycle relation fails at n={n}"
            return None

        def bounds(q=q, rows=rows):
            for n in range(q, n_max + 1):
                lo, hi = counts.free_bounds(n, q)
                if not lo <= rows[n][0] <= hi:
                    return f"n={n}: {lo} <= {rows[n][0]} <= {hi} fails"
            return None

        out.append(_guard(f"free recurrence q={q}", free))
        out.append(_guard(f"homogeneous recurrence q={q}", homogeneous))
        out.append(_guard(f"column relation q={q}", column))
        if q >= 2:
            out.append(_guard(f"free bounds q={q}", bounds))

    def rencontres():
        for n in range(min(n_max, 12) + 1):
            for k in range(n + 1):
                if counts.count_aqc(n, k, 1) != counts.count_aqc_rencontres(n, k):
                    return f"n={n}, k={k}"
        return None

    out.append(_guard("rencontres identity", rencontres))
    return out


def check_gf(q_max: int = 6, order: int = 30) -> list[Check]:
    out = []
    for q in range(1, q_max + 1):
        def ogf(q=q):
            res = series.verify_ogf_ode(q, order)
            return None if res.is_zero() else f"residual {res.nonzero_terms()}"

        def egf(q=q):
            res = series.verify_egf_ode(q, order)
            return None if res.is_zero() else f"residual {res.nonzero_terms()}"

        out.append(_guard(f"OGF equation q={q} order={order}", ogf))
        out.append(_guard(f"EGF equation q={q} order={order}", egf))
    return out


def check_permanent(n_max: int = 7) -> list[Check]:
    out = []
    for n in range(1, n_max + 1):
        def body(n=n):
            for q in range(1, n + 1):
                got = permanent.generating_polynomial(n, q).coefficients("x")
                if got != counts.aqc_row(n, q):
                    return f"q={q}: {got}"
                if n <= 6:
                    m = permanent.build_marked_matrix(n, q)
                    if permanent.permanent_ryser(m) != permanent.permanent_naive(m):
                        return f"q={q}: Ryser and expansion disagree"
            got = permanent.rencontres_polynomial(n).coefficients("x")
            if got != counts.aqc_row(n, 1):
                return f"rencontres polynomial {got}"
            return None
        out.append(_guard(f"permanent n={n}", body))

    def multi5():
        p = permanent.multi_generating_polynomial(5, range(1, 6))
        got = permanent.distribution_from_poly(p, [permanent.family_name(q) for q in range(1, 6)])
        return _first_diff(got, counts.multi_distribution(5, range(1, 6)))

    if n_max >= 5:
        out.append(_guard("multi permanent n=5 lengths=1..5", multi5))
    return out


def check_multi(n_max: int = 7) -> list[Check]:
    out = []
    subsets = [s for r in range(1, 5) for s in itertools.combinations(range(1, 5), r)]
    for n in range(n_max + 1):
        def body(n=n):
            for lengths in subsets:
                dist = counts.multi_distribution(n, lengths)
                if sum(dist.values()) != math.factorial(n):
                    return f"lengths={lengths}: total {sum(dist.values())}"
                if dist != oracle.oracle_multi(n, lengths):
                    return f"lengths={lengths}: formula and enumeration disagree"
            for q in range(1, max(n, 1) + 1):
                for k in range(n // q + 1):
                    if counts.count_multi(n, (q,), (k,)) != counts.count_aqc(n, k, q):
                        return f"single length q={q}, k={k}"
            return None
        out.append(_guard(f"multi n={n}", body))
    return out


SCOPES = ("oracle", "recurrences", "gf", "permanent", "multi")


def run_scope(scope: str, *, n_max: int | None = None, q_max: int | None = None,
              order: int | None = None) -> list[Check]:
    """Run one scope (or ``"all"``) with optional overrides of its limits."""
    def pick(value, default):
        return default if value is None else value

    if scope == "all":
        return [c for s in SCOPES for c in run_scope(s, n_max=n_max, q_max=q_max, order=order)]
    if scope == "oracle":
        return check_oracle(pick(n_max, 8))
    if scope == "recurrences":
        return check_recurrences(pick(n_max, 30), pick(q_max, 6))
    if scope == "gf":
        return check_gf(pick(q_max, 6), pick(order, 30))
    if scope == "permanent":
        return check_permanent(pick(n_max, 7))
    if scope == "multi":
        return check_multi(pick(n_max, 7))
    raise ValueError(f"unknown scope {scope!r}")
