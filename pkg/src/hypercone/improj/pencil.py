"""Hermitian determinantal pencils ``A(z) = z_1 A_1 + ... + z_n A_n``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from ..algebra import CQ, MPoly, UPoly, as_cq, bareiss_det
from ..linalg import det, leading_minors

__all__ = ["HermitianPencil", "MAX_EXPAND"]

MAX_EXPAND = 6


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class HermitianPencil:
    """A list of ``n`` Hermitian ``d x d`` matrices with Gaussian-rational entries."""

    mats: tuple[tuple[tuple[CQ, ...], ...], ...]

    def __init__(self, mats: Sequence[Sequence[Sequence]]):
        ms = tuple(tuple(tuple(as_cq(x) for x in row) for row in m) for m in mats)
        if not ms:
            raise ValueError("a pencil needs at least one matrix")
        d = len(ms[0])
        for k, m in enumerate(ms):
            if len(m) != d or any(len(row) != d for row in m):
                raise ValueError("pencil matrices must be square of one common size")
            for i in range(d):
                for j in range(d):
                    if m[i][j] != m[j][i].conjugate():
                        raise ValueError(f"matrix A_{k + 1} is not Hermitian")
        object.__setattr__(self, "mats", ms)

    @property
    def n(self) -> int:
        return len(self.mats)

    @property
    def d(self) -> int:
        return len(self.mats[0])

    @property
    def is_diagonal(self) -> bool:
        return all(m[i][j] == 0 for m in self.mats for i in range(self.d) for j in range(self.d) if i != j)

    def at(self, y: Sequence) -> list[list[CQ]]:
        """The matrix ``A(y)``."""
        if len(y) != self.n:
            raise ValueError(f"dimension mismatch: point has {len(y)} coordinates, pencil {self.n}")
        ys = [as_cq(v) for v in y]
        return [
            [sum((yk * m[i][j] for yk, m in zip(ys, self.mats)), CQ(0)) for j in range(self.d)]
            for i in range(self.d)
        ]

    def det_at(self, y: Sequence) -> Fraction:
        """``det A(y)``; real because ``A(y)`` is Hermitian for real ``y``."""
        return as_cq(det(self.at(y))).re

    def definiteness(self, y: Sequence) -> int:
        """``1`` if ``A(y)`` is positive definite, ``-1`` if negative definite, else ``0``."""
        minors = [as_cq(m).re for m in leading_minors(self.at(y))]
        if all(m > 0 for m in minors):
            return 1
        if all((m < 0) if k % 2 == 0 else (m > 0) for k, m in enumerate(minors)):
            return -1
        return 0

    def expand(self) -> MPoly:
        """``det(z_1 A_1 + ... + z_n A_n)`` by the Leibniz formula (``d <= 6``)."""
        if self.d > MAX_EXPAND:
            raise ValueError(f"Leibniz expansion is limited to d <= {MAX_EXPAND}")
        n, d = self.n, self.d
        entries = [
            [MPoly.linear([m[i][j] for m in self.mats]) for j in range(d)] for i in range(d)
        ]
        total = MPoly.zero(n)
        for p in permutations(range(d)):
            term = MPoly.const(_perm_sign(p), n)
            for i in range(d):
                term = term * entries[i][p[i]]
                if not term:
                    break
            total = total + term
        return total

    def line_poly(self, x: Sequence, e: Sequence) -> UPoly:
        """``t -> det(A(x) + t A(e))`` computed from the matrices directly."""
        ax, ae = self.at(x), self.at(e)
        rows = [
            [MPoly(1, {(0,): ax[i][j], (1,): ae[i][j]}) for j in range(self.d)] for i in range(self.d)
        ]
        p = bareiss_det(rows)
        if not isinstance(p, MPoly):
            return UPoly([p])
        return p.as_univariate(0)

    def random_direction(self, rng: random.Random) -> tuple[Fraction, ...]:
        return tuple(Fraction(round(rng.gauss(0, 1) * 2**16), 2**16) for _ in range(self.n))
