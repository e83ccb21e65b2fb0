"""Exact decision of common real zeros of two real bivariate polynomials.

A point ``y`` lies in the imaginary projection of ``f`` in two variables iff
``u = Re f(x + iy)`` and ``v = Im f(x + iy)`` have a common zero ``x`` in
``R^2``.  After a shear ``x1 = s + c*t, x2 = t`` that makes the leading
coefficient in ``t`` a nonzero constant, the resultant ``R(s)`` of ``u`` and
``v`` in ``t`` vanishes exactly at the ``s`` where the fibres share a complex
root.  If at such a real ``s`` the first principal subresultant coefficient is
nonzero, the shared root is unique, hence equal to its own conjugate, hence
real.  The remaining (degenerate) fibres are resolved by looking at the
subresultant that carries the gcd.

:class:`BivariateOracle` precomputes the resultant with ``y`` kept symbolic so
that rasters only pay for integer evaluation and a Sturm count per pixel.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import count

import sympy

from ..algebra import CQ, MPoly, principal_subresultant_coeff, resultant, subresultant
from ..realroots import (
    IntPoly,
    count_all_real_roots_int,
    gcd_int,
    isolate_real_roots,
    primitive,
    sign_at_root,
    squarefree_int,
    to_int_poly,
)

_S, _T = 0, 1


class DegenerateFibre(ArithmeticError):
    """A fibre whose gcd has even degree >= 4; not decided by this module."""


# ---------------------------------------------------------------------------
# helpers on real bivariate polynomials
# ---------------------------------------------------------------------------


def _shear_constant(top: MPoly, extra: MPoly | None = None):
    """Smallest-height integer ``c`` with ``top(c, 1) != 0`` (and ``extra(c, 1) != 0``)."""
    for k in count():
        for c in ((0,) if k == 0 else (k, -k)):
            if top.eval((c, 1)) and (extra is None or extra.eval((c, 1))):
                return c
    raise AssertionError("unreachable")


def _shear(p: MPoly, c: int) -> MPoly:
    """Substitute ``x1 = s + c t, x2 = t``; extra variables are passed through."""
    n = p.nvars
    gens = MPoly.gens(n)
    subs = [gens[0] + gens[1] * c, gens[1]] + gens[2:]
    return p.compose(subs)


def _univariate_s(p: MPoly) -> IntPoly:
    """Integer coefficient list of a polynomial in ``s`` only (index 0)."""
    return primitive(to_int_poly(p.drop_vars([0]).as_univariate(0))) if p else []


def _at_s(p: MPoly, s: Fraction) -> IntPoly:
    """``p(s, t)`` as an integer polynomial in ``t``."""
    return to_int_poly(p.partial_eval({_S: s}).drop_vars([_T]).as_univariate(0))


def _to_sympy(p: MPoly, gens):
    expr = 0
    for e, c in p.terms.items():
        term = sympy.Rational(c.re.numerator, c.re.denominator)
        for g, k in zip(gens, e):
            term *= g**k
        expr += term
    return sympy.Poly(expr, *gens, domain="QQ")


def _from_sympy(poly, nvars: int) -> MPoly:
    return MPoly(nvars, {e: Fraction(int(c.p), int(c.q)) for e, c in poly.terms()})


_X1, _X2 = sympy.symbols("x1 x2")


def poly_gcd(u: MPoly, v: MPoly) -> MPoly:
    """Greatest common divisor of real bivariate polynomials (via sympy)."""
    g = sympy.gcd(_to_sympy(u, (_X1, _X2)), _to_sympy(v, (_X1, _X2)))
    return _from_sympy(g, 2)


def _real(p: MPoly) -> None:
    if not p.is_real():
        raise ValueError("expected a real polynomial")


# ---------------------------------------------------------------------------
# the exact decision procedures
# ---------------------------------------------------------------------------


def has_real_zero(h: MPoly) -> bool:
    """Whether a real bivariate polynomial vanishes somewhere on ``R^2``."""
    _real(h)
    if not h:
        return True
    if h.is_constant():
        return False
    c = _shear_constant(h.initial_form())
    H = _shear(h, c)
    dH = H.derivative(_T)
    if not dH:
        # constant in t with a constant leading coefficient: a nonzero constant
        return False
    g = poly_gcd(H, dH)
    Hsf = H.exact_div(g) if not g.is_constant() else H
    dHsf = Hsf.derivative(_T)
    disc = _univariate_s(resultant(Hsf, dHsf, _T))
    # the number of real roots in t is constant between consecutive real roots of disc
    samples = _sample_points(disc)
    for s in samples:
        if count_all_real_roots_int(_at_s(Hsf, s)) > 0:
            return True
    # only the critical fibres are left; a real zero there is a common real zero of H and dH/dt
    return _coprime_common_real_zero(Hsf, dHsf, sheared=True)


def _sample_points(p: IntPoly) -> list[Fraction]:
    """One rational point in every open interval cut out by the real roots of ``p``."""
    if len(p) <= 1:
        return [Fraction(0)]
    iso = isolate_real_roots(_as_upoly(p), Fraction(1, 4))
    ivs = list(iso.intervals)
    if not ivs:
        return [Fraction(0)]
    pts = [ivs[0][0] - 1]
    for (a0, a1), (b0, b1) in zip(ivs, ivs[1:]):
        pts.append((a1 + b0) / 2 if a1 < b0 else a1)
    pts.append(ivs[-1][1] + 1)
    return pts


def _as_upoly(p: IntPoly):
    from ..algebra import UPoly

    return UPoly(p)


def common_real_zero(u: MPoly, v: MPoly) -> bool:
    """Whether real bivariate ``u`` and ``v`` share a zero in ``R^2``."""
    _real(u)
    _real(v)
    if not u:
        return has_real_zero(v)
    if not v:
        return has_real_zero(u)
    g = poly_gcd(u, v)
    if not g.is_constant():
        if has_real_zero(g):
            return True
        u, v = u.exact_div(g), v.exact_div(g)
    if u.is_constant() or v.is_constant():
        return False
    return _coprime_common_real_zero(u, v)


def _coprime_common_real_zero(u: MPoly, v: MPoly, sheared: bool = False) -> bool:
    if not sheared:
        c = _shear_constant(u.initial_form(), v.initial_form())
        u, v = _shear(u, c), _shear(v, c)
    P, Q = (u, v) if u.degree_in(_T) >= v.degree_in(_T) else (v, u)
    n = Q.degree_in(_T)
    if n == 0:
        # Q depends on s alone; a fresh shear makes it depend on t as well
        return _coprime_common_real_zero(Q, P)
    R = _univariate_s(resultant(P, Q, _T))
    if count_all_real_roots_int(R) == 0:
        return False
    psc1 = _univariate_s(principal_subresultant_coeff(P, Q, _T, 1)) if n >= 2 else _univariate_s(Q.coeffs_in(_T)[1])
    Rsf = squarefree_int(R)
    G = gcd_int(Rsf, psc1) if psc1 else Rsf
    if count_all_real_roots_int(Rsf) > count_all_real_roots_int(G):
        return True
    return _degenerate_fibres(P, Q, G)


def _degenerate_fibres(P: MPoly, Q: MPoly, G: IntPoly) -> bool:
    """Check the real roots of ``G`` where the shared factor has degree >= 2."""
    n = Q.degree_in(_T)
    Gsf = squarefree_int(G)
    iso = isolate_real_roots(_as_upoly(Gsf))
    pscs = {}
    subs = {}

    def psc(k):
        if k not in pscs:
            pscs[k] = _univariate_s(principal_subresultant_coeff(P, Q, _T, k)) if k < n else _univariate_s(Q.coeffs_in(_T)[n])
        return pscs[k]

    def sub(k):
        if k not in subs:
            subs[k] = subresultant(P, Q, _T, k) if k < n else Q
        return subs[k]

    for lo, hi in iso.intervals:
        k = next((k for k in range(1, n + 1) if sign_at_root(psc(k), Gsf, lo, hi) != 0), None)
        if k is None:
            raise DegenerateFibre("all principal subresultant coefficients vanish on a fibre")
        if k % 2 == 1:
            return True
        S = sub(k)
        if lo == hi:
            if count_all_real_roots_int(_at_s(S, lo)) > 0:
                return True
            continue
        if k == 2:
            cs = S.coeffs_in(_T)
            b0, b1, b2 = cs + [MPoly.zero(2)] * (3 - len(cs))
            disc = _univariate_s(b1 * b1 - b0 * b2 * 4)
            if sign_at_root(disc, Gsf, lo, hi) >= 0:
                return True
            continue
        raise DegenerateFibre(f"gcd of degree {k} over an irrational point")
    return False


# ---------------------------------------------------------------------------
# parametric oracle for many y
# ---------------------------------------------------------------------------


class _ParamPoly:
    """A polynomial in ``(s, y1, y2)`` evaluated at rational ``y`` into integers in ``s``."""

    def __init__(self, p: MPoly, svar: int, yvars: tuple[int, int]):
        den = p.content_denominator()
        rows: dict[int, list[tuple[int, int, int]]] = {}
        for e, c in p.terms.items():
            rows.setdefault(e[svar], []).append((e[yvars[0]], e[yvars[1]], int(c.re * den)))
        self.deg_s = max(rows, default=-1)
        self.rows = rows
        self.A = max((a for r in rows.values() for a, _, _ in r), default=0)
        self.B = max((b for r in rows.values() for _, b, _ in r), default=0)

    def at(self, y1: Fraction, y2: Fraction) -> IntPoly:
        p1, q1, p2, q2 = y1.numerator, y1.denominator, y2.numerator, y2.denominator
        w1 = [p1**a * q1 ** (self.A - a) for a in range(self.A + 1)]
        w2 = [p2**b * q2 ** (self.B - b) for b in range(self.B + 1)]
        out = [0] * (self.deg_s + 1)
        for k, row in self.rows.items():
            out[k] = sum(c * w1[a] * w2[b] for a, b, c in row)
        while out and out[-1] == 0:
            out.pop()
        return out


class BivariateOracle:
    """Exact membership ``y in I(f)`` for a fixed polynomial ``f`` in two variables."""

    def __init__(self, f: MPoly):
        if f.nvars != 2:
            raise ValueError("BivariateOracle needs a polynomial in two variables")
        if f.is_constant():
            raise ValueError("constant polynomial")
        self.f = f
        top = f.initial_form()
        re_top, im_top = top.real_part(), top.imag_part()
        # four variables (x1, x2, y1, y2); Re and Im of f(x + i y)
        gens = MPoly.gens(4)
        subs = [gens[0] + gens[2] * CQ(0, 1), gens[1] + gens[3] * CQ(0, 1)]
        F = f.compose(subs)
        U, V = F.real_part(), F.imag_part()
        lead = re_top if re_top else im_top
        c = _shear_constant(lead)
        U, V = _shear(U, c), _shear(V, c)
        if lead is re_top:
            P, Q = U, V
        else:
            P, Q = V, U
        self.shear = c
        n = Q.degree_in(_T)
        self._R = _ParamPoly(resultant(P, Q, _T), 0, (2, 3)) if n >= 1 else None
        if n >= 2:
            self._psc = _ParamPoly(principal_subresultant_coeff(P, Q, _T, 1), 0, (2, 3))
        elif n == 1:
            self._psc = _ParamPoly(Q.coeffs_in(_T)[1], 0, (2, 3))
        else:
            self._psc = None
        self.fallbacks = 0

    def contains(self, y) -> bool:
        """Exact decision of ``y in I(f)``."""
        y1, y2 = Fraction(y[0]), Fraction(y[1])
        if self._R is not None:
            R = self._R.at(y1, y2)
            if R:
                nroots = count_all_real_roots_int(R)
                if nroots == 0:
                    return False
                if self._psc is not None:
                    psc = self._psc.at(y1, y2)
                    if psc:
                        G = gcd_int(R, psc)
                        if count_all_real_roots_int(G) < nroots:
                            return True
        self.fallbacks += 1
        u, v = self.f.real_imag_split((y1, y2))
        return common_real_zero(u, v)


@lru_cache(maxsize=64)
def oracle_for(f: MPoly) -> BivariateOracle:
    return BivariateOracle(f)
