"""Sparse multivariate polynomials with integer coefficients.

A polynomial carries its generator names and a dict from exponent tuples
(aligned with the generators) to nonzero ints.  Operands with different
generators are lifted to the sorted union before combining, so
``x + y`` just works.
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["MPoly", "poly_add", "poly_mul"]


class MPoly:
    __slots__ = ("gens", "terms")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 gens: Iterable[str] = ()):
        self.gens: tuple[str, ...] = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError(f"repeated generator in {self.gens}")
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != len(self.gens):
                raise ValueError(f"exponent {exps} does not match generators {self.gens}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if c:
                clean[tuple(exps)] = c
        self.terms: dict[tuple[int, ...], int] = clean

    # construction

    @classmethod
    def const(cls, c: int, gens: Iterable[str] = ()) -> "MPoly":
        gens = tuple(gens)
        return cls({(0,) * len(gens): c}, gens)

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls({(1,): 1}, (name,))

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff: int = 1) -> "MPoly":
        gens = tuple(sorted(p for p, e in powers.items() if e))
        return cls({tuple(powers[g] for g in gens): coeff}, gens)

    @classmethod
    def _coerce(cls, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    def lift(self, gens: Iterable[str]) -> "MPoly":
        """The same polynomial over a superset of generators."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        pos = {g: i for i, g in enumerate(gens)}
        try:
            idx = [pos[g] for g in self.gens]
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]!r} missing from {gens}") from None
        out = {}
        for exps, c in self.terms.items():
            e = [0] * len(gens)
            for i, x in zip(idx, exps):
                e[i] = x
            out[tuple(e)] = c
        return MPoly(out, gens)

    def _align(self, other: "MPoly") -> tuple["MPoly", "MPoly"]:
        if self.gens == other.gens:
            return self, other
        gens = tuple(sorted(set(self.gens) | set(other.gens)))
        return self.lift(gens), other.lift(gens)

    # ring operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(out, a.gens)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({e: -c for e, c in self.terms.items()}, self.gens)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._align(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out, a.gens)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = MPoly.const(1, self.gens)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison and inspection

    def _normal(self) -> frozenset:
        """Generator-independent form: unused generators dropped."""
        return frozenset(
            (tuple((g, x) for g, x in zip(self.gens, e) if x), c)
            for e, c in self.terms.items())

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self) -> int:
        return hash(self._normal())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self, name: str) -> int:
        if name not in self.gens:
            return 0
        i = self.gens.index(name)
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def as_dict(self) -> dict[tuple[tuple[str, int], ...], int]:
        """``{((name, exp), ...): coeff}`` with zero exponents left out."""
        return {tuple((g, x) for g, x in zip(self.gens, e) if x): c
                for e, c in self.terms.items()}

    def coefficients(self, name: str) -> list[int]:
        """Coefficient list ``[c_0, c_1, ...]`` of a univariate polynomial in ``name``."""
        extra = [g for i, g in enumerate(self.gens) if g != name
                 and any(e[i] for e in self.terms)]
        if extra:
            raise ValueError(f"polynomial also involves {extra}")
        out = [0] * (self.degree(name) + 1)
        i = self.gens.index(name) if name in self.gens else None
        for e, c in self.terms.items():
            out[e[i] if i is not None else 0] += c
        return out

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = 0
        for e, c in self.terms.items():
            t = c
            for g, x in zip(self.gens, e):
                if x:
                    t *= values[g] ** x
            total += t
        return total

    def sorted_terms(self, order: Iterable[str] | None = None):
        """Terms in graded lexicographic order, lowest degree first.

        Ties within a degree go to the term with the larger exponent on the
        earliest generator of ``order`` (default: ``self.gens``).
        """
        order = tuple(order) if order is not None else self.gens
        pos = [self.gens.index(g) for g in order if g in self.gens]
        pos += [i for i in range(len(self.gens)) if i not in pos]

        def key(item):
            e = item[0]
            return (sum(e), tuple(-e[i] for i in pos))

        return sorted(self.terms.items(), key=key)

    def to_str(self, order: Iterable[str] | None = None) -> str:
        if not self.terms:
            return "0"
        order = tuple(order) if order is not None else self.gens
        parts = []
        for e, c in self.sorted_terms(order):
            names = {g: x for g, x in zip(self.gens, e) if x}
            mono = "*".join(g if names[g] == 1 else f"{g}^{names[g]}"
                            for g in [g for g in order if g in names]
                            + [g for g in self.gens if g in names and g not in order])
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"MPoly({self.to_str()!r})"


def poly_add(a: MPoly, b: MPoly) -> MPoly:
    return a + b


def poly_mul(a: MPoly, b: MPoly) -> MPoly:
    return a * b
