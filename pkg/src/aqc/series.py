"""Truncated power series with exact rational coefficients.

Used to check, coefficient by coefficient, that the counts of permutations
without adjacent q-cycles satisfy a first-order ODE for their ordinary
generating function and a q-th order ODE for their exponential one.

A :class:`RatSeries` of order ``N`` stores ``c_0..c_N`` and knows nothing
beyond ``z^N``.  Every operation keeps only the coefficients it can still
vouch for: sums and products truncate to the smaller order, and each
derivative drops one order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .counts import count_free
from .errors import ConsistencyError

__all__ = [
    "RatSeries", "series_add", "series_mul", "series_derive",
    "ogf_series", "egf_series", "w_series",
    "ogf_ode_residual", "egf_ode_residual", "verify_ogf_ode", "verify_egf_ode",
]


@dataclass(frozen=True)
class RatSeries:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[:order + 1]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def polynomial(cls, terms: dict[int, int | Fraction], order: int) -> "RatSeries":
        """A polynomial ``sum terms[e] z^e`` viewed at truncation ``order``."""
        cs = [Fraction(0)] * (order + 1)
        for e, c in terms.items():
            if e <= order:
                cs[e] += c
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "RatSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return RatSeries(self.coeffs[:order + 1])

    def __add__(self, other: "RatSeries") -> "RatSeries":
        n = min(self.order, other.order)
        return RatSeries(a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1]))

    def __neg__(self) -> "RatSeries":
        return RatSeries(-c for c in self.coeffs)

    def __sub__(self, other: "RatSeries") -> "RatSeries":
        return self + (-other)

    def __mul__(self, other) -> "RatSeries":
        if isinstance(other, (int, Fraction)):
            return RatSeries(c * other for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return RatSeries(out)

    __rmul__ = __mul__

    def derive(self, times: int = 1) -> "RatSeries":
        s = self
        for _ in range(times):
            if s.order == 0:
                raise ValueError("derivative of an order-0 series has no trustworthy terms")
            s = RatSeries(i * c for i, c in enumerate(s.coeffs) if i)
        return s

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_terms(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
                coef = str(c) if (not mono or c != 1) else ""
                parts.append(f"{coef}{'*' if coef and mono else ''}{mono}")
        return (" + ".join(parts) or "0") + f" + O(z^{self.order + 1})"


def series_add(a: RatSeries, b: RatSeries) -> RatSeries:
    return a + b


def series_mul(a: RatSeries, b: RatSeries) -> RatSeries:
    return a * b


def series_derive(s: RatSeries, times: int = 1) -> RatSeries:
    return s.derive(times)


def _check_q(q: int) -> None:
    if q < 1:
        raise ValueError(f"cycle length q must be >= 1, got {q}")


def ogf_series(q: int, order: int) -> RatSeries:
    """``sum b_n z^n`` through ``z^order``."""
    _check_q(q)
    return RatSeries(count_free(n, q) for n in range(order + 1))


def egf_series(q: int, order: int) -> RatSeries:
    """``sum b_n z^n / n!`` through ``z^order``, constant term ``b_0 = 1`` included."""
    _check_q(q)
    out = []
    fact = 1
    for n in range(order + 1):
        if n:
            fact *= n
        out.append(Fraction(count_free(n, q), fact))
    return RatSeries(out)


def w_series(q: int, order: int) -> RatSeries:
    """``sum_{i>=1} (-1)^i z^(qi) / (qi)!`` through ``z^order``."""
    _check_q(q)
    cs = [Fraction(0)] * (order + 1)
    fact = 1
    for e in range(1, order + 1):
        fact *= e
        if e % q == 0:
            cs[e] = Fraction(-1 if (e // q) % 2 else 1, fact)
    return RatSeries(cs)


def ogf_ode_residual(g: RatSeries, q: int) -> RatSeries:
    """``z^2(1+z^q) g' - (1+z^q)(1-z-(q-1)z^q) g + 1 - (q-1) z^q``.

    The result has order ``g.order - 1``; every coefficient is zero when
    ``g`` holds the correct counts.
    """
    _check_q(q)
    big = g.order + 1
    poly = RatSeries.polynomial
    one_plus = poly({0: 1, q: 1}, big)
    lhs = poly({2: 1}, big) * one_plus * g.derive()
    lin = one_plus * poly({0: 1, 1: -1}, big) + one_plus * poly({q: -(q - 1)}, big)
    return lhs - lin * g + poly({0: 1, q: -(q - 1)}, big)


def verify_ogf_ode(q: int, order: int) -> RatSeries:
    """Residual of the OGF equation for the true counts; should be all zeros."""
    if order < 2 * q + 2:
        raise ValueError(f"need order >= 2q+2 = {2 * q + 2}, got {order}")
    return ogf_ode_residual(ogf_series(q, order), q)


def egf_ode_residual(G: RatSeries, q: int) -> RatSeries:
    """``(1-z) G^(q) - q G^(q-1) - (q-1) G - q w^(q)``, order ``G.order - q``."""
    _check_q(q)
    dq = G.derive(q)
    dq1 = G.derive(q - 1)
    one_minus_z = RatSeries.polynomial({0: 1, 1: -1}, G.order)
    rhs = w_series(q, G.order).derive(q) * q
    return one_minus_z * dq - dq1 * q - G * (q - 1) - rhs


def verify_egf_ode(q: int, order: int) -> RatSeries:
    """Residual of the EGF equation for the true counts.

    Also checks the initial conditions ``G^(i)(0) = i!`` for ``i < q``, i.e.
    ``b_i = i!``, raising :class:`ConsistencyError` if one fails.
    """
    if order < 3 * q + 2:
        raise ValueError(f"need order >= 3q+2 = {3 * q + 2}, got {order}")
    G = egf_series(q, order)
    for i in range(q):
        if G.derive(i)[0] != math.factorial(i):
            raise ConsistencyError(f"G^({i})(0) = {G.derive(i)[0]}, expected {i}!")
    return egf_ode_residual(G, q)

