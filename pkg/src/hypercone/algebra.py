"""Exact complex-rational arithmetic and sparse multivariate polynomials.

Everything here is exact: coefficients are Gaussian rationals built on
:class:`fractions.Fraction`.  Floating point never enters this module.

Polynomials are immutable.  Terms are stored as a map from exponent tuples
to nonzero :class:`CQ` coefficients; the canonical ordering of terms is
graded lexicographic (highest total degree first).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "CQ",
    "MPoly",
    "UPoly",
    "as_cq",
    "bareiss_det",
    "resultant",
    "subresultant",
]


class CQ:
    """Complex rational number ``re + i*im`` with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational | int | str = 0, im: Rational | int | str = 0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> CQ:
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- predicates -------------------------------------------------------
    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = other if type(other) is CQ else _coerce(other)
        if o is None:
            return NotImplemented
        return CQ._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if type(other) is CQ else _coerce(other)
        if o is None:
            return NotImplemented
        return CQ._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = other if type(other) is CQ else _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return CQ._raw(self.re * o.re, self.im)
        return CQ._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = other if type(other) is CQ else _coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero complex rational")
        if not o.im:
            return CQ._raw(self.re / o.re, self.im / o.re)
        d = o.re * o.re + o.im * o.im
        return CQ._raw((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = _coerce(other)
        return NotImplemented if o is None else o / self

    def __neg__(self):
        return CQ._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if k < 0:
            return CQ(1) / (self ** (-k))
        result = CQ(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CQ:
        return CQ._raw(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"CQ({self.to_text()})"

    def to_text(self) -> str:
        """Text form used by the polynomial grammar: ``3``, ``-7/2``, ``2i``, ``(1+2i)``."""
        if not self.im:
            return _frac_text(self.re)
        if not self.re:
            return _imag_text(self.im)
        im = _imag_text(abs(self.im))
        sign = "-" if self.im < 0 else "+"
        return f"({_frac_text(self.re)}{sign}{im})"


def _frac_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _imag_text(q: Fraction) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    if q.denominator == 1:
        return f"{q.numerator}i"
    return f"{q.numerator}/{q.denominator}i"


_ZERO = CQ(0)
_ONE = CQ(1)
I = CQ(0, 1)


def _coerce(x) -> CQ | None:
    """``as_cq`` for scalars; ``None`` lets polynomial operands take over."""
    if isinstance(x, (MPoly, UPoly)):
        return None
    return as_cq(x)


def as_cq(x) -> CQ:
    """Coerce ints, Fractions, exact decimal strings and CQ to CQ."""
    if type(x) is CQ:
        return x
    if isinstance(x, (int, Fraction)):
        return CQ._raw(Fraction(x), Fraction(0))
    if isinstance(x, str):
        return CQ(Fraction(x))
    if isinstance(x, float):
        # floats are binary rationals; keep them exactly
        return CQ._raw(Fraction(x), Fraction(0))
    if isinstance(x, complex):
        return CQ._raw(Fraction(x.real), Fraction(x.imag))
    raise TypeError(f"cannot convert {type(x).__name__} to CQ")


# ---------------------------------------------------------------------------
# Multivariate polynomials
# ---------------------------------------------------------------------------

Exponent = tuple


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


class MPoly:
    """Sparse polynomial in ``nvars`` variables over the Gaussian rationals.

    Variables are indexed from 0; the textual form names them ``z1..zn``.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = int(nvars)
        clean: dict[Exponent, CQ] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.nvars:
                    raise ValueError(f"exponent {exp} does not have length {self.nvars}")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = as_cq(c)
                if c:
                    clean[exp] = clean[exp] + c if exp in clean else c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, nvars: int, terms: dict) -> MPoly:
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls._from_clean(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> MPoly:
        c = as_cq(c)
        return cls._from_clean(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> MPoly:
        """The variable with 0-based index ``i``."""
        if not 0 <= i < nvars:
            raise ValueError(f"variable index {i} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[i] = 1
        return cls._from_clean(nvars, {tuple(exp): _ONE})

    @classmethod
    def gens(cls, nvars: int) -> list[MPoly]:
        return [cls.var(i, nvars) for i in range(nvars)]

    @classmethod
    def linear(cls, coeffs: Sequence, constant=0) -> MPoly:
        """``sum(coeffs[j] * z_j) + constant``."""
        n = len(coeffs)
        terms = {}
        for j, a in enumerate(coeffs):
            exp = [0] * n
            exp[j] = 1
            terms[tuple(exp)] = a
        terms[(0,) * n] = constant
        return cls(n, terms)

    # -- basic properties -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> CQ:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def sorted_terms(self) -> list[tuple[Exponent, CQ]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, CQ]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    # -- equality ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, CQ)):
            return self == MPoly.const(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- ring operations --------------------------------------------------
    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        return MPoly.const(other, self.nvars)

    def __add__(self, other):
        o = self._coerce(other)
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms[e] + c if e in terms else c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MPoly._from_clean(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._from_clean(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = as_cq(other)
            if not c:
                return MPoly.zero(self.nvars)
            return MPoly._from_clean(self.nvars, {e: v * c for e, v in self.terms.items()})
        o = self._coerce(other)
        terms: dict[Exponent, CQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                if e in terms:
                    s = terms[e] + p
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
                else:
                    terms[e] = p
        return MPoly._from_clean(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> MPoly:
        """Conjugate every coefficient."""
        return MPoly._from_clean(self.nvars, {e: c.conjugate() for e, c in self.terms.items()})

    def scale(self, c) -> MPoly:
        return self * as_cq(c)

    def exact_div(self, g: MPoly) -> MPoly:
        """Quotient ``self / g``; raises ``ArithmeticError`` unless it divides exactly."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lc = g.leading_term()
        if len(g.terms) == 1:
            out = {}
            for e, c in self.terms.items():
                q = tuple(a - b for a, b in zip(e, lexp))
                if min(q, default=0) < 0:
                    raise ArithmeticError("polynomial division is not exact")
                out[q] = c / lc
            return MPoly._from_clean(self.nvars, out)
        rem = self
        quot: dict[Exponent, CQ] = {}
        while rem:
            e, c = rem.leading_term()
            q = tuple(a - b for a, b in zip(e, lexp))
            if min(q) < 0:
                raise ArithmeticError("polynomial division is not exact")
            qc = c / lc
            quot[q] = qc
            rem = rem - g.shift(q) * qc
        return MPoly._from_clean(self.nvars, quot)

    def shift(self, exp: Exponent) -> MPoly:
        """Multiply by the monomial with exponent ``exp``."""
        return MPoly._from_clean(
            self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self.terms.items()}
        )

    # -- evaluation and substitution --------------------------------------
    def __call__(self, *point):
        return self.eval(point[0] if len(point) == 1 and isinstance(point[0], (list, tuple)) else point)

    def eval(self, point: Sequence) -> CQ:
        """Exact value at a point of Gaussian rationals (ints and Fractions accepted)."""
        if len(point) != self.nvars:
            raise ValueError(f"dimension mismatch: point has {len(point)} coordinates, polynomial {self.nvars}")
        pt = [as_cq(p) for p in point]
        powers: list[dict[int, CQ]] = [{0: _ONE} for _ in pt]

        def pw(i: int, k: int) -> CQ:
            cache = powers[i]
            if k not in cache:
                cache[k] = pt[i] ** k
            return cache[k]

        total = _ZERO
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return total

    def compose(self, subs: Sequence[MPoly]) -> MPoly:
        """Substitute polynomial ``subs[j]`` for variable ``j``.

        All substitutes must share one variable count, which becomes the
        variable count of the result.
        """
        if len(subs) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutes, got {len(subs)}")
        if not subs:
            return self
        m = subs[0].nvars
        pow_cache: list[dict[int, MPoly]] = [{0: MPoly.const(1, m), 1: s} for s in subs]

        def pw(i: int, k: int) -> MPoly:
            cache = pow_cache[i]
            if k not in cache:
                j = max(x for x in cache if x <= k)
                val = cache[j]
                for _ in range(k - j):
                    val = val * subs[i]
                cache[k] = val
            return cache[k]

        out = MPoly.zero(m)
        for e, c in self.sorted_terms():
            term = MPoly.const(c, m)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def partial_eval(self, assignments: Mapping[int, object]) -> MPoly:
        """Fix some variables to constants; the variable count is unchanged."""
        vals = {i: as_cq(v) for i, v in assignments.items()}
        out: dict[Exponent, CQ] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in vals.items():
                if e[i]:
                    c = c * v ** e[i]
                    e2[i] = 0
            e2 = tuple(e2)
            s = out[e2] + c if e2 in out else c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MPoly._from_clean(self.nvars, out)

    def derivative(self, i: int) -> MPoly:
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return MPoly._from_clean(self.nvars, out)

    def extend(self, nvars: int, positions: Sequence[int] | None = None) -> MPoly:
        """Embed into a ring with ``nvars`` variables.

        ``positions[j]`` is the new index of old variable ``j``; by default the
        old variables keep their indices.
        """
        positions = list(range(self.nvars)) if positions is None else list(positions)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * nvars
            for j, k in enumerate(e):
                e2[positions[j]] += k
            out[tuple(e2)] = c
        return MPoly._from_clean(nvars, out)

    def drop_vars(self, keep: Sequence[int]) -> MPoly:
        """Project onto the variables in ``keep``; the others must not occur."""
        keep = list(keep)
        out = {}
        for e, c in self.terms.items():
            if any(k for i, k in enumerate(e) if i not in keep):
                raise ValueError("polynomial depends on a dropped variable")
            out[tuple(e[i] for i in keep)] = c
        return MPoly._from_clean(len(keep), out)

    # -- structural operations --------------------------------------------
    def homogenize(self) -> MPoly:
        """Homogenization with a new variable z0 placed at index 0."""
        if not self:
            raise ValueError("cannot homogenize the zero polynomial")
        d = self.degree()
        return MPoly._from_clean(
            self.nvars + 1, {(d - sum(e),) + e: c for e, c in self.terms.items()}
        )

    def dehomogenize(self, index: int = 0) -> MPoly:
        """Set variable ``index`` to 1 and remove it."""
        out: dict[Exponent, CQ] = {}
        for e, c in self.terms.items():
            e2 = e[:index] + e[index + 1:]
            s = out[e2] + c if e2 in out else c
            if s:
                out[e2] = s
            else:
                out.pop(e2, None)
        return MPoly._from_clean(self.nvars - 1, out)

    def initial_form(self) -> MPoly:
        """Sum of the terms of maximal total degree."""
        if not self:
            raise ValueError("the zero polynomial has no initial form")
        d = self.degree()
        return MPoly._from_clean(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def homogeneous_part(self, d: int) -> MPoly:
        return MPoly._from_clean(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def restrict_line(self, x: Sequence, e: Sequence) -> UPoly:
        """The univariate polynomial ``t -> f(x + t e)``."""
        if len(x) != self.nvars or len(e) != self.nvars:
            raise ValueError("dimension mismatch in restrict_line")
        lines = [UPoly([as_cq(a), as_cq(b)]) for a, b in zip(x, e)]
        pow_cache: list[dict[int, UPoly]] = [{0: UPoly([_ONE])} for _ in lines]

        def pw(i: int, k: int) -> UPoly:
            cache = pow_cache[i]
            if k not in cache:
                cache[k] = pw(i, k - 1) * lines[i]
            return cache[k]

        out = UPoly([])
        for exp, c in self.terms.items():
            term = UPoly([c])
            for i, k in enumerate(exp):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def real_imag_split(self, y: Sequence) -> tuple[MPoly, MPoly]:
        """Real polynomials ``u, v`` in real ``x`` with ``f(x + i y) = u(x) + i v(x)``."""
        if len(y) != self.nvars:
            raise ValueError(f"dimension mismatch: y has {len(y)} coordinates, polynomial {self.nvars}")
        n = self.nvars
        subs = [MPoly._from_clean(n, _shifted_var(j, n, as_cq(y[j]) * I)) for j in range(n)]
        g = self.compose(subs)
        return g.real_part(), g.imag_part()

    def real_part(self) -> MPoly:
        """Coefficientwise real part (meaningful for real variables)."""
        return MPoly._from_clean(self.nvars, {e: CQ._raw(c.re, Fraction(0)) for e, c in self.terms.items() if c.re})

    def imag_part(self) -> MPoly:
        return MPoly._from_clean(self.nvars, {e: CQ._raw(c.im, Fraction(0)) for e, c in self.terms.items() if c.im})

    def as_univariate(self, i: int) -> UPoly:
        """View as a univariate polynomial in variable ``i`` (the only one allowed to occur)."""
        coeffs: dict[int, CQ] = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial is not univariate in the requested variable")
            coeffs[e[i]] = c
        return UPoly([coeffs.get(k, _ZERO) for k in range(max(coeffs, default=-1) + 1)])

    def coeffs_in(self, i: int) -> list[MPoly]:
        """Coefficients with respect to variable ``i`` (index = power); they do not involve ``i``."""
        d = self.degree_in(i)
        buckets: list[dict] = [{} for _ in range(d + 1)]
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            buckets[k][tuple(e2)] = c
        return [MPoly._from_clean(self.nvars, b) for b in buckets]

    def content_denominator(self) -> int:
        """Least common multiple of all coefficient denominators."""
        from math import lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, c.re.denominator, c.im.denominator)
        return den

    # -- text -------------------------------------------------------------
    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Deterministic text in the parser grammar (graded lex order)."""
        names = list(names) if names is not None else [f"z{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(exp) if k
            )
            neg = c.is_real() and c.re < 0 or (not c.re and c.im < 0)
            mag = -c if neg else c
            if mono:
                coef = "" if mag == 1 else mag.to_text() + "*"
                body = coef + mono
            else:
                body = mag.to_text()
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.to_text()!r})"


def _shifted_var(j: int, n: int, shift: CQ) -> dict:
    exp = [0] * n
    exp[j] = 1
    terms = {tuple(exp): _ONE}
    if shift:
        terms[(0,) * n] = shift
    return terms


# ---------------------------------------------------------------------------
# Univariate polynomials
# ---------------------------------------------------------------------------


class UPoly:
    """Dense univariate polynomial with CQ coefficients, ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [as_cq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_roots(cls, roots: Iterable) -> UPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-as_cq(r), 1])
        return p

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs)

    def real_coeffs(self) -> list[Fraction]:
        if not self.is_real():
            raise ValueError("polynomial has non-real coefficients")
        return [c.re for c in self.coeffs]

    def lc(self) -> CQ:
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        o = other if isinstance(other, UPoly) else UPoly([other])
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + [_ZERO] * (n - len(self.coeffs))
        b = o.coeffs + [_ZERO] * (n - len(o.coeffs))
        return UPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = other if isinstance(other, UPoly) else UPoly([other])
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            c = as_cq(other)
            return UPoly([x * c for x in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly([])
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, t):
        t = as_cq(t)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> UPoly:
        return UPoly([c * k for k, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: UPoly) -> tuple[UPoly, UPoly]:
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        r = list(self.coeffs)
        dq = len(r) - len(other.coeffs)
        if dq < 0:
            return UPoly([]), self
        q = [_ZERO] * (dq + 1)
        lc = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = r[k + len(other.coeffs) - 1] / lc
            q[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    r[k + j] = r[k + j] - c * b
        return UPoly(q), UPoly(r[: len(other.coeffs) - 1])

    def monic(self) -> UPoly:
        if not self:
            return self
        lc = self.coeffs[-1]
        return UPoly([c / lc for c in self.coeffs])

    def gcd(self, other: UPoly) -> UPoly:
        """Monic gcd over the Gaussian rationals."""
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def conj(self) -> UPoly:
        return UPoly([c.conjugate() for c in self.coeffs])

    def to_mpoly(self, nvars: int = 1, var: int = 0) -> MPoly:
        terms = {}
        for k, c in enumerate(self.coeffs):
            exp = [0] * nvars
            exp[var] = k
            terms[tuple(exp)] = c
        return MPoly(nvars, terms)

    def __repr__(self):
        return f"UPoly({self.to_mpoly(1).to_text(['t'])!r})"


# ---------------------------------------------------------------------------
# Determinants, resultants, subresultants
# ---------------------------------------------------------------------------


def bareiss_det(matrix: Sequence[Sequence]):
    """Fraction-free determinant of a square matrix over an integral domain.

    Entries may be ints, Fractions, CQ or MPoly; the divisions of the
    Bareiss recurrence are exact.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n) if not _is_zero(m[i][k])), None)
            if swap is None:
                return _zero_like(m[0][0])
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = piv * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else _exact_div(num, prev)
        prev = piv
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _is_zero(x) -> bool:
    return not x


def _zero_like(x):
    if isinstance(x, MPoly):
        return MPoly.zero(x.nvars)
    return 0


def _exact_div(a, b):
    if isinstance(a, MPoly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division in Bareiss elimination")
        return q
    return a / b


def _sylvester_rows(fc: list, gc: list, zero, j: int) -> list[list]:
    """Rows of the j-th subresultant matrix, coefficients listed highest power first."""
    m, n = len(fc) - 1, len(gc) - 1
    width = m + n - j
    rows = []
    for k in range(n - j - 1, -1, -1):
        row = [zero] * width
        # x^k * f occupies powers m+k .. k
        for p, c in enumerate(fc):
            row[width - 1 - (p + k)] = c
        rows.append(row)
    for k in range(m - j - 1, -1, -1):
        row = [zero] * width
        for p, c in enumerate(gc):
            row[width - 1 - (p + k)] = c
        rows.append(row)
    return rows


def resultant(u: MPoly, v: MPoly, var: int) -> MPoly:
    """Sylvester resultant of ``u`` and ``v`` with respect to variable ``var``."""
    if u.nvars != v.nvars:
        raise ValueError("dimension mismatch in resultant")
    if not u or not v:
        return MPoly.zero(u.nvars)
    m, n = u.degree_in(var), v.degree_in(var)
    if m == 0 and n == 0:
        raise ValueError("both polynomials are constant in the eliminated variable")
    if m == 0:
        return u ** n
    if n == 0:
        return v ** m
    zero = MPoly.zero(u.nvars)
    rows = _sylvester_rows(u.coeffs_in(var), v.coeffs_in(var), zero, 0)
    return bareiss_det(rows)


def subresultant(u: MPoly, v: MPoly, var: int, j: int) -> MPoly:
    """The j-th subresultant polynomial of ``u, v`` in variable ``var``.

    Defined for ``0 <= j < min(deg u, deg v)`` by the determinantal formula;
    ``j = 0`` is the resultant.  Its coefficient of ``var**j`` is the
    j-th principal subresultant coefficient.
    """
    m, n = u.degree_in(var), v.degree_in(var)
    if not 0 <= j < min(m, n):
        raise ValueError(f"subresultant index {j} out of range for degrees {m}, {n}")
    zero = MPoly.zero(u.nvars)
    rows = _sylvester_rows(u.coeffs_in(var), v.coeffs_in(var), zero, j)
    size = m + n - 2 * j
    lead_cols = size - 1
    width = m + n - j
    out = zero
    xv = MPoly.var(var, u.nvars)
    for i in range(j + 1):
        col = width - 1 - i
        mat = [row[:lead_cols] + [row[col]] for row in rows]
        d = bareiss_det(mat)
        if d:
            out = out + d * xv ** i
    return out


def principal_subresultant_coeff(u: MPoly, v: MPoly, var: int, j: int) -> MPoly:
    """Coefficient of ``var**j`` in the j-th subresultant."""
    m, n = u.degree_in(var), v.degree_in(var)
    zero = MPoly.zero(u.nvars)
    rows = _sylvester_rows(u.coeffs_in(var), v.coeffs_in(var), zero, j)
    size = m + n - 2 * j
    width = m + n - j
    mat = [row[: size - 1] + [row[width - 1 - j]] for row in rows]
    return bareiss_det(mat)


def monomials(nvars: int, degree: int) -> Iterator[Exponent]:
    """All exponent vectors of total degree exactly ``degree``."""
    for e in iproduct(range(degree + 1), repeat=nvars):
        if sum(e) == degree:
            yield e
