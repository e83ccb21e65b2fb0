"""Exact univariate real-root machinery.

Sturm chains, squarefree parts, real root counting and isolation over the
rationals.  Internally polynomials are lists of Python ints (index = power)
kept primitive, which is much faster than carrying Fractions through the
remainder sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .algebra import CQ, UPoly, as_cq

__all__ = [
    "RootIsolation",
    "SturmChain",
    "all_roots_real",
    "count_real_roots",
    "isolate_real_roots",
    "roots_complex_numeric",
    "sign_at_root",
    "squarefree",
    "sturm_chain",
]

DEFAULT_PRECISION = Fraction(1, 2**30)

IntPoly = list  # list[int], index = power, no trailing zeros


# ---------------------------------------------------------------------------
# integer polynomial kernel
# ---------------------------------------------------------------------------


def _strip(p: IntPoly) -> IntPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def primitive(p: IntPoly) -> IntPoly:
    """Divide out the positive content; the sign of the leading coefficient is kept."""
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            return p
    if g > 1:
        return [c // g for c in p]
    return p


def to_int_poly(p) -> IntPoly:
    """Primitive integer polynomial with the same roots and sign pattern as ``p``.

    Accepts a real :class:`UPoly` or a sequence of ints/Fractions/CQ (index = power).
    """
    coeffs = p.real_coeffs() if isinstance(p, UPoly) else [_as_frac(c) for c in p]
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    out = [int(c * den) for c in coeffs]
    return primitive(_strip(out))


def _as_frac(c) -> Fraction:
    if isinstance(c, CQ):
        if c.im:
            raise ValueError("polynomial has non-real coefficients")
        return c.re
    return Fraction(c)


def derivative(p: IntPoly) -> IntPoly:
    return [k * c for k, c in enumerate(p)][1:]


def prem_neg(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of ``-rem(a, b)``, made primitive."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = 0
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r.pop()
        _strip(r)
        steps += 1
    # r = lb**steps * rem(a, b)
    if lb < 0 and steps % 2 == 1:
        r = [-c for c in r]
    return primitive([-c for c in r])


def gcd_int(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Q with positive leading coefficient."""
    a, b = list(a), list(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, prem_neg(a, b)
    if not a:
        return []
    a = primitive(a)
    return a if a[-1] > 0 else [-c for c in a]


def divexact_int(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive part of ``a / b`` when ``b`` divides ``a`` over Q."""
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = r[k + len(b) - 1] / lb
        q[k] = c
        if c:
            for j, bc in enumerate(b):
                r[k + j] -= c * bc
    if any(r):
        raise ArithmeticError("polynomial division is not exact")
    return to_int_poly(q)


def squarefree_int(p: IntPoly) -> IntPoly:
    if len(p) <= 2:
        return primitive(list(p))
    g = gcd_int(p, derivative(p))
    if len(g) <= 1:
        return primitive(list(p))
    return divexact_int(p, g)


def eval_sign(p: IntPoly, x: Fraction) -> int:
    """Sign of ``p(x)`` for rational ``x``."""
    x = Fraction(x)
    return _sign_hom(p, x.numerator, x.denominator)


def _sign_hom(p: IntPoly, a: int, b: int) -> int:
    # sum c_k a^k b^(d-k); b > 0 so the sign equals that of p(a/b)
    acc = 0
    bpow = 1
    for c in reversed(p):
        acc = acc * a + c * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def _chain(p: IntPoly) -> list[IntPoly]:
    chain = [p]
    dp = primitive(derivative(p))
    if not dp:
        return chain
    chain.append(dp)
    while True:
        r = prem_neg(chain[-2], chain[-1])
        if not r:
            break
        chain.append(r)
    return chain


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def _var_at(chain: list[IntPoly], x) -> int:
    if x is None or x == "+inf":
        return _variations((1 if c[-1] > 0 else -1) for c in chain)
    if x == "-inf":
        return _variations(((1 if c[-1] > 0 else -1) * (-1 if (len(c) - 1) % 2 else 1)) for c in chain)
    return _variations(_sign_hom(c, x.numerator, x.denominator) for c in chain)


def count_roots_int(p: IntPoly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of ``p`` in ``(lo, hi]`` (``None`` = infinite end)."""
    if not p:
        raise ValueError("zero polynomial has infinitely many roots")
    if len(p) == 1:
        return 0
    if lo is not None or hi is not None:
        p = squarefree_int(p)
    chain = _chain(p)
    return _var_at(chain, "-inf" if lo is None else Fraction(lo)) - _var_at(
        chain, "+inf" if hi is None else Fraction(hi)
    )


def count_all_real_roots_int(p: IntPoly) -> int:
    """Distinct real roots over the whole line; works without a squarefree step."""
    if len(p) <= 1:
        return 0
    chain = _chain(p)
    return _var_at(chain, "-inf") - _var_at(chain, "+inf")


def cauchy_bound(p: IntPoly) -> Fraction:
    lc = abs(p[-1])
    return 1 + Fraction(max((abs(c) for c in p[:-1]), default=0), lc)


# ---------------------------------------------------------------------------
# public API on UPoly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """Signed remainder sequence of ``(p, p')`` for a real polynomial."""

    seq: tuple[tuple[int, ...], ...]

    def variations(self, x: Fraction | None | str) -> int:
        return _var_at([list(c) for c in self.seq], x)

    def count(self, lo=None, hi=None) -> int:
        return self.variations("-inf" if lo is None else Fraction(lo)) - self.variations(
            "+inf" if hi is None else Fraction(hi)
        )

    @property
    def is_squarefree(self) -> bool:
        return len(self.seq[-1]) == 1


def sturm_chain(p: UPoly) -> SturmChain:
    ip = _nonzero_int(p)
    return SturmChain(tuple(tuple(c) for c in _chain(ip)))


def _nonzero_int(p) -> IntPoly:
    ip = to_int_poly(p)
    if not ip:
        raise ValueError("zero polynomial")
    return ip


def squarefree(p: UPoly) -> UPoly:
    """Monic squarefree part ``p / gcd(p, p')`` of a real polynomial."""
    sf = squarefree_int(_nonzero_int(p))
    lc = sf[-1]
    return UPoly([Fraction(c, lc) for c in sf])


def count_real_roots(p: UPoly, interval: tuple | None = None) -> int:
    """Number of distinct real roots of ``p``.

    ``interval`` is ``(lo, hi)`` with ``None`` for an infinite end; the count
    is over the half-open interval ``(lo, hi]``.
    """
    ip = _nonzero_int(p)
    if interval is None:
        return count_all_real_roots_int(ip)
    lo, hi = interval
    return count_roots_int(ip, lo, hi)


def all_roots_real(p: UPoly) -> bool:
    """True iff every complex root of ``p`` is real (multiplicities allowed)."""
    sf = squarefree_int(_nonzero_int(p))
    return count_all_real_roots_int(sf) == len(sf) - 1


def all_roots_real_int(p: IntPoly) -> bool:
    sf = squarefree_int(p)
    return count_all_real_roots_int(sf) == len(sf) - 1


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint sorted rational intervals ``[lo, hi]``, one distinct real root each."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]

    def __len__(self):
        return len(self.intervals)

    def midpoints(self) -> list[Fraction]:
        return [(a + b) / 2 for a, b in self.intervals]


def yun_int(p: IntPoly) -> list[tuple[IntPoly, int]]:
    """Squarefree decomposition ``p = c * prod(a_i ** i)`` over Q (nonconstant factors only)."""
    if len(p) <= 1:
        return []
    return [(primitive(to_int_poly(a)), i) for a, i in _cq_yun(UPoly(p))]


def _sub(a: list, b: list) -> list:
    """``a - b`` over Q, returned as a primitive integer polynomial (scaled positively)."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    n = max(len(fa), len(fb))
    fa += [Fraction(0)] * (n - len(fa))
    fb += [Fraction(0)] * (n - len(fb))
    diff = [x - y for x, y in zip(fa, fb)]
    den = 1
    for x in diff:
        den = lcm(den, x.denominator)
    return primitive(_strip([int(x * den) for x in diff]))


def _isolate_sf(p: IntPoly, precision: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the roots of a squarefree polynomial."""
    if len(p) <= 1:
        return []
    chain = _chain(p)
    bound = cauchy_bound(p)
    out = []
    stack = [(-bound, bound, _var_at(chain, -bound), _var_at(chain, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1 and hi - lo <= precision:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _var_at(chain, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    final = []
    for lo, hi in out:
        if _sign_hom(p, hi.numerator, hi.denominator) == 0:
            final.append((hi, hi))
        else:
            final.append((lo, hi))
    return final


def refine_interval(p: IntPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval ``(lo, hi]`` of squarefree ``p``."""
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    s_mid = _sign_hom(p, mid.numerator, mid.denominator)
    if s_mid == 0:
        return mid, mid
    s_hi = _sign_hom(p, hi.numerator, hi.denominator)
    if s_hi == 0:
        return hi, hi
    return (mid, hi) if s_mid != s_hi else (lo, mid)


def isolate_real_roots(p: UPoly, precision=DEFAULT_PRECISION) -> RootIsolation:
    """Isolating intervals of width at most ``precision`` with multiplicities."""
    ip = _nonzero_int(p)
    precision = Fraction(precision)
    items = []
    for factor, mult in yun_int(ip):
        for iv in _isolate_sf(factor, precision):
            items.append([iv[0], iv[1], mult, factor])
    items.sort(key=lambda it: (it[0], it[1]))
    # intervals coming from different squarefree factors may overlap: refine until disjoint
    changed = True
    while changed:
        changed = False
        for a, b in zip(items, items[1:]):
            if a[1] >= b[0] and not (a[0] == a[1] == b[0] == b[1]):
                a[0], a[1] = refine_interval(a[3], a[0], a[1])
                b[0], b[1] = refine_interval(b[3], b[0], b[1])
                changed = True
        items.sort(key=lambda it: (it[0], it[1]))
    return RootIsolation(
        tuple((it[0], it[1]) for it in items), tuple(it[2] for it in items)
    )


def sign_at_root(q: IntPoly, g: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Sign of ``q`` at the unique root of squarefree ``g`` in ``(lo, hi]`` (or at ``lo == hi``)."""
    if lo == hi:
        return _sign_hom(q, lo.numerator, lo.denominator) if q else 0
    if not q:
        return 0
    if len(q) == 1:
        return 1 if q[0] > 0 else -1
    h = gcd_int(g, q)
    if len(h) > 1 and count_roots_int(h, lo, hi) > 0:
        return 0
    while True:
        s_lo = _sign_hom(q, lo.numerator, lo.denominator)
        if s_lo != 0 and count_roots_int(q, lo, hi) == 0:
            return s_lo
        lo, hi = refine_interval(g, lo, hi)
        if lo == hi:
            return _sign_hom(q, lo.numerator, lo.denominator)


# ---------------------------------------------------------------------------
# numeric complex roots
# ---------------------------------------------------------------------------


def _cq_yun(p: UPoly) -> list[tuple[UPoly, int]]:
    out = []
    dp = p.derivative()
    g = p.gcd(dp)
    if g.degree() == 0:
        return [(p.monic(), 1)]
    b = p.divmod(g)[0]
    c = dp.divmod(g)[0]
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = b.gcd(d) if d else b.monic()
        if a.degree() > 0:
            out.append((a, i))
        b = b.divmod(a)[0]
        c = d.divmod(a)[0] if d else UPoly([])
        d = c - b.derivative()
        i += 1
    return out


def roots_complex_numeric(p: UPoly, tol: float = 1e-9) -> list[complex]:
    """All ``deg p`` complex roots (with multiplicity) as floats.

    Multiple roots are separated exactly first (squarefree decomposition over
    the Gaussian rationals), so the numeric step only sees simple roots.
    Raises ``ArithmeticError`` if a residual exceeds ``tol * (1 + sum |c|)``.
    """
    if not isinstance(p, UPoly):
        p = UPoly(p)
    if p.degree() < 1:
        raise ValueError("need a polynomial of degree >= 1")
    scale = 1.0 + sum(abs(complex(c)) for c in p.coeffs)
    roots: list[complex] = []
    for factor, mult in _cq_yun(p):
        rs = _simple_roots(factor)
        roots.extend(r for r in rs for _ in range(mult))
    for r in roots:
        if abs(_horner(p, r)) > tol * scale:
            raise ArithmeticError(f"root {r} does not meet residual tolerance {tol}")
    return sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def _horner(p: UPoly, z: complex) -> complex:
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + complex(c)
    return acc


def _simple_roots(p: UPoly) -> list[complex]:
    coeffs = [complex(c) for c in reversed(p.coeffs)]
    if len(coeffs) == 2:
        # linear factors are solved exactly
        r = -p.coeffs[0] / p.coeffs[1]
        return [complex(r)]
    rs = np.roots(coeffs)
    dp = p.derivative()
    out = []
    for r in rs:
        z = complex(r)
        for _ in range(8):
            fz = _horner(p, z)
            dz = _horner(dp, z)
            if dz == 0:
                break
            step = fz / dz
            z -= step
            if abs(step) <= 1e-17 * max(1.0, abs(z)):
                break
        out.append(z)
    return out


def exact_real_roots_count_interval_closed(p: IntPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct roots in the closed interval ``[lo, hi]``."""
    extra = 1 if _sign_hom(p, lo.numerator, lo.denominator) == 0 else 0
    return count_roots_int(p, lo, hi) + extra


def as_real_upoly(coeffs: Sequence) -> UPoly:
    return UPoly([as_cq(c) for c in coeffs])
