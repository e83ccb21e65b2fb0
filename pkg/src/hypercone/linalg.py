"""Small exact linear algebra over the rationals (and Gaussian rationals for determinants)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list of rows


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(to_fraction_matrix(rows))[1])


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One rational solution of ``a x = b`` or ``None`` if inconsistent."""
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    if not rows:
        return []
    n = len(rows[0]) - 1
    red, piv = rref(rows)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = red[i][n]
    return x


def nullspace(rows: Sequence[Sequence], n: int | None = None) -> list[list[Fraction]]:
    """Rational basis of the right kernel."""
    m = to_fraction_matrix(rows)
    n = len(m[0]) if m else (n or 0)
    red, piv = rref(m) if m else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(piv):
            v[c] = -red[i][f]
        basis.append(v)
    return basis


def det(rows: Sequence[Sequence]):
    """Determinant by Gaussian elimination over a field (Fractions or CQ entries)."""
    m = [list(r) for r in rows]
    n = len(m)
    result = 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0 * m[0][0] if n else 1
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        pv = m[c][c]
        result = result * pv
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / pv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def charpoly(a: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients (index = power) of ``det(t I - A)`` by Faddeev-LeVerrier."""
    n = len(a)
    A = to_fraction_matrix(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        c_prev = coeffs[n - k + 1]
        M = [[M[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][l] * M[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(AM[i][i] for i in range(n)) / k
        M = AM
    return coeffs


def inertia(a: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` eigenvalue counts of a real symmetric matrix.

    All eigenvalues of a symmetric matrix are real, so Descartes' rule of signs
    on the characteristic polynomial is exact.
    """
    n = len(a)
    if n == 0:
        return 0, 0, 0
    p = charpoly(a)
    zero = next(k for k, c in enumerate(p) if c)
    pos = _sign_changes(p)
    neg = _sign_changes([c * (-1) ** k for k, c in enumerate(p)])
    return pos, neg, zero


def _sign_changes(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(r) for r in zip(*a)]


def leading_minors(a: Sequence[Sequence]) -> list:
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def congruence_diagonalize(a: Sequence[Sequence]) -> tuple[list[Fraction], Matrix]:
    """``(D, P)`` with ``P^T A P = diag(D)`` for a rational symmetric ``A``.

    Symmetric Gaussian elimination; a zero pivot with a nonzero entry further
    along its row is repaired by adding that column (and row) to the pivot.
    The columns of ``P`` are the vectors realizing each diagonal value.
    """
    n = len(a)
    A = to_fraction_matrix(a)
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add(dst: int, src: int, s: Fraction) -> None:
        # column and row operation dst += s * src, mirrored in P
        for r in range(n):
            A[r][dst] += s * A[r][src]
        for c in range(n):
            A[dst][c] += s * A[src][c]
        for r in range(n):
            P[r][dst] += s * P[r][src]

    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                add(k, j, Fraction(1))
                if A[k][k] == 0:
                    add(k, j, Fraction(1))
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue
                # A[k][k] = A[j][j] = 0 and A[k][j] != 0: the new pivot is 2 A[k][j]
                add(k, j, Fraction(1))
        piv = A[k][k]
        for j in range(k + 1, n):
            if A[k][j]:
                add(j, k, -A[k][j] / piv)
    return [A[i][i] for i in range(n)], P
