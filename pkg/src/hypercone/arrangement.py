"""Chambers of central hyperplane arrangements, computed exactly.

A central arrangement is given by rational normal vectors ``a_1..a_d``; its
chambers are the connected components of the complement of the hyperplanes
``a_l . y = 0``, identified with their sign vectors.  Chambers are
enumerated incrementally: hyperplanes are inserted one at a time and every
existing chamber is tested for being split by the new one.  Whether a sign
pattern is realizable is decided by an exact rational linear program that
maximizes a common slack.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .linalg import rank

__all__ = [
    "Chamber",
    "LinearFormSet",
    "UnionSide",
    "arrangement_membership",
    "chambers",
    "chambers_csv",
    "general_position",
    "zaslavsky_central",
]


@dataclass(frozen=True)
class LinearFormSet:
    """Linear forms ``y -> a . y`` with rational coefficient vectors in dimension ``n``."""

    n: int
    forms: tuple[tuple[Fraction, ...], ...]

    def __init__(self, n: int, forms: Iterable[Sequence]):
        forms = tuple(tuple(Fraction(x) for x in a) for a in forms)
        for a in forms:
            if len(a) != n:
                raise ValueError(f"form {a} does not have dimension {n}")
            if not any(a):
                raise ValueError("linear forms must be nonzero")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "forms", forms)

    @property
    def d(self) -> int:
        return len(self.forms)

    def deduplicate(self) -> LinearFormSet:
        """Drop forms defining a hyperplane already present (proportional vectors)."""
        kept: list[tuple[Fraction, ...]] = []
        for a in self.forms:
            if not any(_proportional(a, b) for b in kept):
                kept.append(a)
        return LinearFormSet(self.n, kept)

    @property
    def has_duplicates(self) -> bool:
        return self.deduplicate().d < self.d

    def values(self, y: Sequence) -> list[Fraction]:
        return [sum((ai * Fraction(yi) for ai, yi in zip(a, y)), Fraction(0)) for a in self.forms]

    def polynomial(self):
        """The product of the forms as an :class:`~hypercone.algebra.MPoly`."""
        from .algebra import MPoly

        p = MPoly.const(1, self.n)
        for a in self.forms:
            p = p * MPoly.linear(a)
        return p


def _proportional(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return rank([a, b]) == 1


@dataclass(frozen=True)
class Chamber:
    """A chamber: its sign vector and a rational interior point (max-norm 1)."""

    signs: tuple[int, ...]
    witness: tuple[Fraction, ...]

    def negated(self) -> Chamber:
        return Chamber(tuple(-s for s in self.signs), tuple(-w for w in self.witness))

    def sign_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)


class UnionSide(Enum):
    INSIDE = "InsideUnion"
    OUTSIDE = "OutsideUnion"


# ---------------------------------------------------------------------------
# counting formulas and predicates
# ---------------------------------------------------------------------------


def zaslavsky_central(n: int, d: int) -> int:
    """Chamber count of a central arrangement of ``d`` hyperplanes in general position in ``R^n``."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return 2 * sum(comb(d - 1, k) for k in range(n))


def general_position(fs: LinearFormSet) -> bool:
    """True iff every ``min(n, d)`` of the forms are linearly independent."""
    k = min(fs.n, fs.d)
    return all(rank(sub) == k for sub in combinations(fs.forms, k))


def arrangement_membership(fs: LinearFormSet, y: Sequence) -> UnionSide:
    """Whether ``y`` lies on one of the hyperplanes."""
    if len(y) != fs.n:
        raise ValueError(f"dimension mismatch: point has {len(y)} coordinates, arrangement {fs.n}")
    return UnionSide.INSIDE if any(v == 0 for v in fs.values(y)) else UnionSide.OUTSIDE


# ---------------------------------------------------------------------------
# exact linear programming
# ---------------------------------------------------------------------------


def _simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """Maximize ``c.x`` subject to ``A x <= b``, ``x >= 0`` with ``b >= 0``.

    Dense tableau simplex with Bland's rule; returns ``(value, x)``.  The
    feasible region used here is bounded, so unboundedness is an error.
    """
    m, n = len(A), len(c)
    # tableau rows: [A | I | b]; objective row: [-c | 0 | 0]
    T = [list(A[i]) + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    z = [-ci for ci in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + i for i in range(m)]
    width = n + m
    while True:
        col = next((j for j in range(width) if z[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            if T[i][col] > 0:
                ratio = T[i][-1] / T[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("unbounded linear program")
        r = best[1]
        piv = T[r][col]
        T[r] = [x / piv for x in T[r]]
        for i in range(m):
            if i != r and T[i][col]:
                f = T[i][col]
                T[i] = [x - f * y for x, y in zip(T[i], T[r])]
        if z[col]:
            f = z[col]
            z = [x - f * y for x, y in zip(z, T[r])]
        basis[r] = col
    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return z[-1], x[:n]


def strict_point(n: int, constraints: Sequence[tuple[Sequence[Fraction], int]]) -> tuple[Fraction, ...] | None:
    """A point ``y`` with ``sign(a . y) = s`` for every ``(a, s)``, or ``None``.

    Maximizes ``eps`` subject to ``s a . y >= eps``, ``|y_j| <= 1``,
    ``eps <= 1``; the pattern is realizable iff the optimum is positive.
    """
    # variables: p_1..p_n, q_1..q_n (y = p - q, 0 <= p, q <= 1), eps
    nv = 2 * n + 1
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for a, s in constraints:
        row = [Fraction(0)] * nv
        for j in range(n):
            row[j] = -s * a[j]
            row[n + j] = s * a[j]
        row[2 * n] = Fraction(1)
        A.append(row)
        b.append(Fraction(0))
    for j in range(2 * n + 1):
        row = [Fraction(0)] * nv
        row[j] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    c = [Fraction(0)] * nv
    c[2 * n] = Fraction(1)
    value, x = _simplex_max(A, b, c)
    if value <= 0:
        return None
    y = [x[j] - x[n + j] for j in range(n)]
    return _normalize(y)


def _normalize(y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    m = max(abs(v) for v in y)
    return tuple(v / m for v in y)


# ---------------------------------------------------------------------------
# chamber enumeration
# ---------------------------------------------------------------------------


def chambers(fs: LinearFormSet) -> list[Chamber]:
    """All chambers of the arrangement, sorted by sign vector (``+`` first)."""
    n = fs.n
    # start with the whole space, witnessed by an arbitrary point
    cells: list[tuple[tuple[int, ...], tuple[Fraction, ...]]] = [((), (Fraction(1),) * n)]
    for l, a in enumerate(fs.forms):
        new_cells = []
        for signs, w in cells:
            val = sum((ai * wi for ai, wi in zip(a, w)), Fraction(0))
            base = [(fs.forms[k], s) for k, s in enumerate(signs)]
            for s in (1, -1):
                if val * s > 0:
                    new_cells.append((signs + (s,), w))
                    continue
                p = strict_point(n, base + [(a, s)])
                if p is not None:
                    new_cells.append((signs + (s,), p))
        cells = new_cells
    out = [Chamber(s, _normalize(w)) for s, w in cells]
    out.sort(key=lambda c: tuple(-s for s in c.signs))
    return out


def chambers_csv(chs: Sequence[Chamber], n: int | None = None) -> str:
    """CSV text: header row, then one chamber per row (signs, then witness coordinates)."""
    if not chs:
        return ""
    d = len(chs[0].signs)
    n = len(chs[0].witness) if n is None else n
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"s{l + 1}" for l in range(d)] + [f"w{j + 1}" for j in range(n)])
    for c in chs:
        w.writerow(["+" if s > 0 else "-" for s in c.signs] + [str(x) for x in c.witness])
    return buf.getvalue()
