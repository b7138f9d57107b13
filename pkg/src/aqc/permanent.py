"""Generating polynomials for adjacent cycles via permanents of marked matrices.

Each adjacent cycle ``(a, a+1, ..., a+q-1)`` gets its own indeterminate,
named ``<family>_<a>``, which multiplies every matrix position ``(i, j)`` the
cycle maps ``i -> j``.  All other positions are 1.  In the permanent, a term
uses all ``q`` marked positions of a cycle exactly when the permutation
contains that cycle, so after :func:`collapse` (the ``q``-th power of a member
becomes one factor of the family variable, lower powers become 1) the
coefficient of ``x^k`` counts permutations with ``k`` adjacent q-cycles.

The permanent is computed with Ryser's inclusion-exclusion formula, walking
column subsets in Gray-code order and updating polynomial row sums one column
at a time.  Plain expansion over all ``n!`` permutations is kept as a
cross-check.

>>> str(generating_polynomial(6, 3))
'697 + 22*x + x^2'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .counts import validate_lengths
from .errors import ConsistencyError, EnumerationLimitError
from .poly import MPoly

__all__ = [
    "DEFAULT_CAP", "MarkedMatrix", "family_name", "member_name",
    "build_marked_matrix", "build_marked_matrix_multi",
    "permanent", "permanent_ryser", "permanent_naive", "collapse",
    "generating_polynomial", "multi_generating_polynomial",
    "rencontres_polynomial", "distribution_from_poly",
]

DEFAULT_CAP = 10
NAIVE_CAP = 8

_FAMILY_LETTERS = "xyzuv"


def family_name(q: int) -> str:
    """Family variable for length ``q``: x, y, z, u, v for 1..5, then ``t<q>``."""
    return _FAMILY_LETTERS[q - 1] if q <= len(_FAMILY_LETTERS) else f"t{q}"


def member_name(family: str, a: int) -> str:
    return f"{family}_{a}"


@dataclass(frozen=True)
class MarkedMatrix:
    """Square matrix of monomials; ``families`` maps family name -> cycle length."""
    n: int
    entries: tuple[tuple[MPoly, ...], ...]
    families: Mapping[str, int] = field(default_factory=dict)

    def __getitem__(self, ij: tuple[int, int]) -> MPoly:
        """Entry at 1-based position ``(i, j)``."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    @property
    def gens(self) -> tuple[str, ...]:
        return self.entries[0][0].gens if self.n else ()

    def __str__(self) -> str:
        cells = [[e.to_str() for e in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _from_marks(n: int, marks: list[list[dict[str, int]]],
                families: Mapping[str, int]) -> MarkedMatrix:
    gens = tuple(sorted({g for row in marks for cell in row for g in cell}))
    rows = []
    for row in marks:
        rows.append(tuple(MPoly({tuple(cell.get(g, 0) for g in gens): 1}, gens)
                          for cell in row))
    return MarkedMatrix(n, tuple(rows), dict(families))


def _mark_cycles(marks: list[list[dict[str, int]]], n: int, q: int, family: str) -> None:
    for a in range(1, n - q + 2):
        name = member_name(family, a)
        for i in range(a, a + q):
            j = i + 1 if i < a + q - 1 else a
            cell = marks[i - 1][j - 1]
            cell[name] = cell.get(name, 0) + 1


def build_marked_matrix(n: int, q: int, family: str = "x") -> MarkedMatrix:
    """Marked matrix tracking every adjacent ``q``-cycle of S_n.

    >>> m = build_marked_matrix(6, 3)
    >>> str(m[2, 3]), str(m[3, 1]), str(m[5, 6])
    ('x_1*x_2', 'x_1', 'x_4')
    """
    if q < 1:
        raise ValueError(f"cycle length q must be >= 1, got {q}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    marks: list[list[dict[str, int]]] = [[{} for _ in range(n)] for _ in range(n)]
    _mark_cycles(marks, n, q, family)
    return _from_marks(n, marks, {family: q})


def build_marked_matrix_multi(n: int, lengths: Sequence[int],
                              names: Sequence[str] | None = None) -> MarkedMatrix:
    """One variable family per length; entries multiply all applicable marks."""
    lengths = validate_lengths(lengths)
    if lengths[-1] > n:
        raise ValueError(f"cycle length {lengths[-1]} exceeds n={n}")
    if names is None:
        names = [family_name(q) for q in lengths]
    if len(names) != len(lengths) or len(set(names)) != len(names):
        raise ValueError(f"need {len(lengths)} distinct family names, got {names}")
    marks: list[list[dict[str, int]]] = [[{} for _ in range(n)] for _ in range(n)]
    for q, name in zip(lengths, names):
        _mark_cycles(marks, n, q, name)
    return _from_marks(n, marks, dict(zip(names, lengths)))


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise EnumerationLimitError(f"permanent of order {n} exceeds cap {cap}")


def _mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return out


def _add_terms(acc: dict, b: dict, sign: int) -> None:
    for e, c in b.items():
        s = acc.get(e, 0) + sign * c
        if s:
            acc[e] = s
        else:
            acc.pop(e, None)


def permanent_ryser(m: MarkedMatrix, cap: int = DEFAULT_CAP) -> MPoly:
    """Ryser's formula with Gray-code column updates, exact over MPoly entries."""
    n = m.n
    _check_cap(n, cap)
    gens = m.gens
    if n == 0:
        return MPoly.const(1)
    cols = [[m.entries[i][j].terms for i in range(n)] for j in range(n)]
    rowsums: list[dict] = [{} for _ in range(n)]
    in_set = [False] * n
    total: dict = {}
    size = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        sign = -1 if in_set[j] else 1
        in_set[j] = not in_set[j]
        size += sign
        for i in range(n):
            _add_terms(rowsums[i], cols[j][i], sign)
        if any(not r for r in rowsums):
            continue
        prod = rowsums[0]
        for r in rowsums[1:]:
            prod = _mul_terms(prod, r)
        _add_terms(total, prod, -1 if (n - size) % 2 else 1)
    return MPoly(total, gens)


def permanent_naive(m: MarkedMatrix, cap: int = NAIVE_CAP) -> MPoly:
    """Sum over all permutations of the product of the chosen entries."""
    n = m.n
    _check_cap(n, cap)
    total: dict = {}
    for sigma in itertools.permutations(range(n)):
        prod = {(0,) * len(m.gens): 1}
        for i, j in enumerate(sigma):
            prod = _mul_terms(prod, m.entries[i][j].terms)
        _add_terms(total, prod, 1)
    return MPoly(total, m.gens)


def permanent(m: MarkedMatrix, method: str = "ryser", cap: int = DEFAULT_CAP) -> MPoly:
    if method == "ryser":
        return permanent_ryser(m, cap)
    if method == "naive":
        return permanent_naive(m, min(cap, NAIVE_CAP))
    raise ValueError(f"unknown permanent method {method!r}")


def collapse(p: MPoly, lengths: Mapping[str, int]) -> MPoly:
    """Replace ``member^q`` by its family variable and lower powers by 1.

    Members are recognised by name ``<family>_<index>``; every generator of
    ``p`` must belong to a family listed in ``lengths``.

    >>> str(collapse(MPoly.monomial({"x_1": 3, "x_2": 1}), {"x": 3}))
    'x'
    """
    fams = sorted(lengths)
    fam_pos = {f: i for i, f in enumerate(fams)}
    owner = []
    for g in p.gens:
        fam = g.rpartition("_")[0]
        if fam not in fam_pos:
            raise ValueError(f"variable {g!r} belongs to no declared family")
        owner.append((fam_pos[fam], lengths[fam]))
    out: dict[tuple[int, ...], int] = {}
    for exps, c in p.terms.items():
        e = [0] * len(fams)
        for (pos, q), x in zip(owner, exps):
            if x > q:
                raise ConsistencyError(
                    f"exponent {x} above cycle length {q} in term {exps} of {p.gens}")
            if x == q:
                e[pos] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return MPoly(out, fams)


def generating_polynomial(n: int, q: int, method: str = "ryser",
                          cap: int = DEFAULT_CAP) -> MPoly:
    """Polynomial in ``x`` whose ``x^k`` coefficient is ``a(n, k)``."""
    m = build_marked_matrix(n, q)
    return collapse(permanent(m, method, cap), m.families)


def multi_generating_polynomial(n: int, lengths: Sequence[int],
                                names: Sequence[str] | None = None,
                                method: str = "ryser",
                                cap: int = DEFAULT_CAP) -> MPoly:
    """Polynomial in the family variables marking each length in ``lengths``."""
    m = build_marked_matrix_multi(n, lengths, names)
    return collapse(permanent(m, method, cap), m.families)


def rencontres_polynomial(n: int, method: str = "ryser", cap: int = DEFAULT_CAP) -> MPoly:
    """``per(xI + (J - I))``.

    Each permutation contributes ``x`` to the power of its number of fixed
    points, so the ``x^k`` coefficient is the rencontres number for ``k``.

    >>> str(rencontres_polynomial(3))
    '2 + 3*x + x^3'
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    x = MPoly.var("x")
    one = MPoly.const(1, ("x",))
    rows = tuple(tuple(x if i == j else one for j in range(n)) for i in range(n))
    return permanent(MarkedMatrix(n, rows), method, cap)


def distribution_from_poly(p: MPoly, names: Sequence[str]) -> dict[tuple[int, ...], int]:
    """``{(k_1, ..., k_m): coeff}`` reading exponents of ``names`` in order."""
    out = {}
    for key, c in p.as_dict().items():
        powers = dict(key)
        extra = set(powers) - set(names)
        if extra:
            raise ValueError(f"unexpected variables {sorted(extra)}")
        out[tuple(powers.get(g, 0) for g in names)] = c
    return out
