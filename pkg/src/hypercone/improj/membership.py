"""Membership oracles for the imaginary projection ``I(f) = {Im z : f(z) = 0}``.

Every exact route answers the question "do ``u = Re f(x + iy)`` and
``v = Im f(x + iy)`` have a common real zero ``x``" for a class of
polynomials where that can be decided with rational arithmetic.  Everything
else goes to a one-sided numeric search that can certify ``Inside`` (up to a
tolerance) but never ``Outside``.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np
from scipy.optimize import minimize

from ..algebra import CQ, MPoly
from ..arrangement import LinearFormSet
from ..linalg import inertia, solve
from ..realroots import all_roots_real, count_all_real_roots_int, gcd_int, to_int_poly
from .bivariate import oracle_for
from .pencil import HermitianPencil

__all__ = [
    "Membership",
    "MembershipConfig",
    "Method",
    "Verdict",
    "membership",
    "point_decider",
    "quadratic_form",
]


class Verdict(Enum):
    INSIDE = "Inside"
    OUTSIDE = "Outside"
    UNKNOWN = "Unknown"


class Method(Enum):
    EXACT_UNIVARIATE = "ExactUnivariate"
    EXACT_LINEAR = "ExactLinear"
    EXACT_QUADRATIC = "ExactQuadratic"
    EXACT_BINARY_FORM = "ExactBinaryForm"
    EXACT_BIVARIATE_RESULTANT = "ExactBivariateResultant"
    EXACT_HERMITIAN_PENCIL = "ExactHermitianPencil"
    EXACT_DIAGONAL_DET = "ExactDiagonalDet"
    NUMERIC_HEURISTIC = "NumericHeuristic"

    @property
    def exact(self) -> bool:
        return self is not Method.NUMERIC_HEURISTIC


@dataclass(frozen=True)
class Membership:
    value: Verdict
    method: Method

    def __post_init__(self):
        if self.method.exact and self.value is Verdict.UNKNOWN:
            raise ValueError("exact methods decide; they never return Unknown")
        if not self.method.exact and self.value is Verdict.OUTSIDE:
            raise ValueError("the numeric heuristic cannot certify Outside")

    @property
    def inside(self) -> bool:
        return self.value is Verdict.INSIDE


@dataclass(frozen=True)
class MembershipConfig:
    tol: float = 1e-9
    starts: int = 32
    seed: int = 0
    witness_samples: int = 64


DEFAULT_CONFIG = MembershipConfig()

Target = Union[MPoly, HermitianPencil, LinearFormSet, tuple]
Decider = Callable[[Sequence], Membership]


def _nvars(f: Target) -> int:
    if isinstance(f, MPoly):
        return f.nvars
    if isinstance(f, (HermitianPencil, LinearFormSet)):
        return f.n
    return _nvars(f[0])


def membership(f: Target, y: Sequence, mode: str = "exact", cfg: MembershipConfig = DEFAULT_CONFIG) -> Membership:
    """Decide whether ``y`` lies in the imaginary projection of ``f``.

    ``f`` may be a polynomial, a Hermitian pencil, a set of real linear forms
    (the diagonal-determinant case) or a sequence of those read as a product.
    ``mode`` is ``"exact"`` (route to an exact method where one applies) or
    ``"numeric"`` (always the heuristic).
    """
    if isinstance(f, list):
        f = tuple(f)
    return point_decider(f, mode, cfg)(y)


@lru_cache(maxsize=128)
def point_decider(f: Target, mode: str = "exact", cfg: MembershipConfig = DEFAULT_CONFIG) -> Decider:
    """A reusable decision function ``y -> Membership`` with per-``f`` precomputation."""
    if mode not in ("exact", "numeric"):
        raise ValueError(f"unknown mode {mode!r}")
    n = _nvars(f)
    if isinstance(f, tuple):
        parts = [point_decider(g, mode, cfg) for g in f]
        if any(_nvars(g) != n for g in f):
            raise ValueError("factors must share the number of variables")
        inner = _union(parts)
    elif mode == "numeric":
        g = f if isinstance(f, MPoly) else _expand(f)
        inner = _heuristic(g, cfg)
    elif isinstance(f, LinearFormSet):
        inner = _diag_det(f)
    elif isinstance(f, HermitianPencil):
        inner = _pencil(f, cfg)
    else:
        inner = _route_poly(f, cfg)

    def decide(y: Sequence) -> Membership:
        if len(y) != n:
            raise ValueError(f"dimension mismatch: point has {len(y)} coordinates, polynomial {n}")
        return inner(tuple(Fraction(v) if not isinstance(v, float) else v for v in y))

    return decide


def _expand(f) -> MPoly:
    if isinstance(f, LinearFormSet):
        return f.polynomial()
    return f.expand()


def _union(parts: list[Decider]) -> Decider:
    def decide(y):
        unknown = None
        last = None
        for part in parts:
            m = part(y)
            if m.value is Verdict.INSIDE:
                return m
            if m.value is Verdict.UNKNOWN:
                unknown = m
            last = m
        return unknown or last

    return decide


# ---------------------------------------------------------------------------
# routing of explicit polynomials
# ---------------------------------------------------------------------------


def _route_poly(f: MPoly, cfg: MembershipConfig) -> Decider:
    if f.is_constant():
        value = Verdict.INSIDE if f.is_zero() else Verdict.OUTSIDE
        result = Membership(value, Method.EXACT_LINEAR)
        return lambda y: result
    d = f.degree()
    if f.nvars == 1:
        return _univariate(f)
    if d == 1:
        return _linear(f)
    if f.nvars == 2:
        oracle = oracle_for(f)
        return lambda y: Membership(
            Verdict.INSIDE if oracle.contains(y) else Verdict.OUTSIDE, Method.EXACT_BIVARIATE_RESULTANT
        )
    if d == 2 and f.is_real():
        return _quadratic(f)
    return _heuristic(f, cfg)


def _exact(flag: bool, method: Method) -> Membership:
    return Membership(Verdict.INSIDE if flag else Verdict.OUTSIDE, method)


def _univariate(f: MPoly) -> Decider:
    def decide(y):
        g = f.restrict_line((CQ(0, y[0]),), (1,))
        u = to_int_poly([c.re for c in g.coeffs])
        v = to_int_poly([c.im for c in g.coeffs])
        h = u if not v else v if not u else gcd_int(u, v)
        return _exact(count_all_real_roots_int(h) > 0, Method.EXACT_UNIVARIATE)

    return decide


def _linear(f: MPoly) -> Decider:
    n = f.nvars
    a = [f.terms.get(tuple(int(i == j) for i in range(n)), CQ(0)) for j in range(n)]
    a0 = f.constant_term()
    alpha = [c.re for c in a]
    beta = [c.im for c in a]

    def decide(y):
        # Re: alpha.x - beta.y + Re a0 = 0 ; Im: beta.x + alpha.y + Im a0 = 0
        rhs = [
            sum(b * yi for b, yi in zip(beta, y)) - a0.re,
            -sum(al * yi for al, yi in zip(alpha, y)) - a0.im,
        ]
        return _exact(solve([alpha, beta], rhs) is not None, Method.EXACT_LINEAR)

    return decide


def quadratic_form(f: MPoly) -> tuple[list[list[Fraction]], list[Fraction], Fraction]:
    """``(A, b, c)`` with ``f(z) = z^T A z + b^T z + c``, ``A`` symmetric (real ``f``, degree <= 2)."""
    if not f.is_real() or f.degree() > 2:
        raise ValueError("expected a real polynomial of degree at most 2")
    n = f.nvars
    A = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    c = Fraction(0)
    for e, coef in f.terms.items():
        q = coef.re
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        if len(idx) == 0:
            c = q
        elif len(idx) == 1:
            b[idx[0]] = q
        elif idx[0] == idx[1]:
            A[idx[0]][idx[0]] = q
        else:
            A[idx[0]][idx[1]] = A[idx[1]][idx[0]] = q / 2
    return A, b, c


def quadratic_contains(A, b, c0, y) -> bool:
    """Exact ``y in I(f)`` for real ``f(z) = z^T A z + b^T z + c0``.

    With ``z = x + iy`` the imaginary part is linear in ``x`` and the real part
    is a quadratic function of ``x``; so ``y`` is inside iff the quadratic
    attains ``y^T A y - c0`` on the affine solution set of the linear equation.
    """
    n = len(y)
    Ay = [sum(A[i][j] * y[j] for j in range(n)) for i in range(n)]
    w = [2 * v for v in Ay]
    beta = -sum(bi * yi for bi, yi in zip(b, y))
    tau = sum(yi * v for yi, v in zip(y, Ay)) - c0
    k = next((i for i, v in enumerate(w) if v), None)
    if k is None:
        if beta:
            return False
        x0 = [Fraction(0)] * n
        N = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]  # columns = basis
    else:
        x0 = [Fraction(0)] * n
        x0[k] = beta / w[k]
        cols = []
        for j in range(n):
            if j == k:
                continue
            col = [Fraction(0)] * n
            col[j] = Fraction(1)
            col[k] = -w[j] / w[k]
            cols.append(col)
        N = [[col[i] for col in cols] for i in range(n)]
    m = len(N[0]) if N else 0
    Ax0 = [sum(A[i][j] * x0[j] for j in range(n)) for i in range(n)]
    h = sum(x0[i] * Ax0[i] for i in range(n)) + sum(bi * xi for bi, xi in zip(b, x0))
    if m == 0:
        return h == tau
    AN = [[sum(A[i][l] * N[l][j] for l in range(n)) for j in range(m)] for i in range(n)]
    M = [[sum(N[l][i] * AN[l][j] for l in range(n)) for j in range(m)] for i in range(m)]
    g = [2 * sum(N[l][i] * Ax0[l] for l in range(n)) + sum(N[l][i] * b[l] for l in range(n)) for i in range(m)]
    pos, neg, _ = inertia(M)
    if pos and neg:
        return True
    if not pos and not neg:
        return any(g) or h == tau
    s = solve(M, [-gi / 2 for gi in g])
    if s is None:
        return True
    Ms = [sum(M[i][j] * s[j] for j in range(m)) for i in range(m)]
    extreme = sum(si * v for si, v in zip(s, Ms)) + sum(gi * si for gi, si in zip(g, s)) + h
    return tau >= extreme if pos else tau <= extreme


def _quadratic(f: MPoly) -> Decider:
    A, b, c0 = quadratic_form(f)
    return lambda y: _exact(quadratic_contains(A, b, c0, y), Method.EXACT_QUADRATIC)


def _binary_form(f: MPoly) -> Decider:
    """Homogeneous ``f`` in two variables: a union of lines if all projective roots are real, else the plane."""
    c = f.leading_term()[1]
    fr = f.scale(CQ(1) / c)
    if not fr.is_real():
        everything = Membership(Verdict.INSIDE, Method.EXACT_BINARY_FORM)
        return lambda y: everything
    dehom = fr.restrict_line((1, 0), (0, 1))
    if dehom.degree() >= 1 and not all_roots_real(dehom):
        everything = Membership(Verdict.INSIDE, Method.EXACT_BINARY_FORM)
        return lambda y: everything
    return lambda y: _exact(not fr.eval(y), Method.EXACT_BINARY_FORM)


def _diag_det(fs: LinearFormSet) -> Decider:
    return lambda y: _exact(any(v == 0 for v in fs.values(y)), Method.EXACT_DIAGONAL_DET)


# ---------------------------------------------------------------------------
# Hermitian pencils
# ---------------------------------------------------------------------------


def _point_rng(seed: int, y) -> random.Random:
    key = f"{seed}:" + ",".join(str(v) for v in y)
    return random.Random(int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big"))


def _pencil(p: HermitianPencil, cfg: MembershipConfig) -> Decider:
    """Exact pencil route.

    ``det A(y) = 0`` puts ``y`` on the real variety, hence inside.  A definite
    ``A(y)`` certifies outside.  Otherwise ``y`` is outside iff the
    determinant is hyperbolic in direction ``y``: for ``n = 2`` this is one
    real-rootedness test along ``y``'s orthogonal line; for ``n >= 3`` a line
    with non-real roots is searched for, and finding one certifies inside.
    A diagonal pencil factors into real linear forms, so a nonzero
    determinant already certifies outside.
    """
    if p.is_diagonal:
        return lambda y: _exact(p.det_at(y) == 0, Method.EXACT_DIAGONAL_DET)
    method = Method.EXACT_HERMITIAN_PENCIL

    def decide(y):
        if p.det_at(y) == 0:
            return _exact(True, method)
        if p.definiteness(y):
            return _exact(False, method)
        if p.n == 1:
            return _exact(False, method)
        if p.n == 2:
            w = (-y[1], y[0])
            return _exact(not all_roots_real(p.line_poly(w, y)), method)
        rng = _point_rng(cfg.seed, y)
        for _ in range(cfg.witness_samples):
            x = p.random_direction(rng)
            if not all_roots_real(p.line_poly(x, y)):
                return _exact(True, method)
        return Membership(Verdict.UNKNOWN, Method.NUMERIC_HEURISTIC)

    return decide


# ---------------------------------------------------------------------------
# numeric heuristic
# ---------------------------------------------------------------------------


class _NumericPoly:
    """Vectorised float evaluation of ``f`` and its holomorphic gradient."""

    def __init__(self, f: MPoly, with_grad: bool = True):
        items = f.sorted_terms()
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(len(items), f.nvars)
        self.coeffs = np.array([complex(c) for _, c in items])
        self.n = f.nvars
        mags = np.abs(self.coeffs)
        self.radius = float(min(1e3, 1.0 + mags.max() / max(mags[0], 1e-300))) if len(mags) else 1.0
        self.grads = [_NumericPoly(f.derivative(j), False) for j in range(f.nvars)] if with_grad else []

    def value(self, z: np.ndarray) -> complex:
        if not len(self.coeffs):
            return 0j
        return complex(np.dot(self.coeffs, np.prod(z[None, :] ** self.exps, axis=1)))

    def value_grad(self, z: np.ndarray):
        return self.value(z), np.array([g.value(z) for g in self.grads])


def _heuristic(f: MPoly, cfg: MembershipConfig) -> Decider:
    if f.is_constant():
        verdict = Membership(Verdict.INSIDE if f.is_zero() else Verdict.UNKNOWN, Method.NUMERIC_HEURISTIC)
        return lambda y: verdict
    num = _NumericPoly(f)
    homogeneous_real = f.is_homogeneous() and f.is_real()

    def decide(y):
        if homogeneous_real and not f.eval(y):
            return Membership(Verdict.INSIDE, Method.NUMERIC_HEURISTIC)
        yf = np.array([float(v) for v in y])

        def obj(x):
            val, grad = num.value_grad(x + 1j * yf)
            return float(abs(val) ** 2), 2 * np.real(np.conj(val) * grad)

        rng = np.random.default_rng(_point_rng(cfg.seed, y).getrandbits(63))
        best = np.inf
        for _ in range(cfg.starts):
            x0 = rng.uniform(-num.radius, num.radius, size=num.n)
            res = minimize(obj, x0, jac=True, method="BFGS", options={"gtol": 1e-12, "maxiter": 400})
            best = min(best, float(res.fun))
            if best < cfg.tol:
                return Membership(Verdict.INSIDE, Method.NUMERIC_HEURISTIC)
        return Membership(Verdict.UNKNOWN, Method.NUMERIC_HEURISTIC)

    return decide
