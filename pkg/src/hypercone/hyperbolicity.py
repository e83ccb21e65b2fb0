"""Hyperbolicity tests, hyperbolicity cones and cone counts.

A homogeneous real ``f`` is hyperbolic with respect to ``e`` if ``f(e) != 0``
and ``t -> f(x + t e)`` has only real roots for every real ``x``.  The
hyperbolicity cones are the connected components of the complement of the
imaginary projection, so they can be counted through the classes where that
complement is known exactly: binary forms, quadrics, products of linear forms
and diagonal pencils.  Everything else falls back to random sampling, which
can refute hyperbolicity but never certify it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .algebra import CQ, MPoly, UPoly, as_cq
from .arrangement import LinearFormSet, chambers
from .improj.pencil import MAX_EXPAND, HermitianPencil
from .linalg import congruence_diagonalize, inertia
from .realroots import all_roots_real, count_real_roots, isolate_real_roots

__all__ = [
    "ConeCountReport",
    "CountMethod",
    "HyperbolicityConfig",
    "HyperbolicityVerdict",
    "HypMethod",
    "Status",
    "cone_membership",
    "count_cones",
    "count_cones_bivariate",
    "count_cones_linear_product",
    "count_cones_quadratic",
    "is_hyperbolic",
    "linear_factors",
    "upper_bound",
]

Target = Union[MPoly, LinearFormSet, HermitianPencil, tuple]


class Status(Enum):
    HYPERBOLIC = "Hyperbolic"
    NOT_HYPERBOLIC = "NotHyperbolic"
    PROBABLY_HYPERBOLIC = "ProbablyHyperbolic"


class HypMethod(Enum):
    EXACT_BIVARIATE = "ExactBivariate"
    EXACT_QUADRATIC = "ExactQuadratic"
    EXACT_LINEAR_PRODUCT = "ExactLinearProduct"
    EXACT_DIAGONAL_DET = "ExactDiagonalDet"
    EXACT_HERMITIAN_PENCIL = "ExactHermitianPencil"
    RANDOMIZED = "Randomized"

    @property
    def exact(self) -> bool:
        return self is not HypMethod.RANDOMIZED


@dataclass(frozen=True)
class HyperbolicityConfig:
    samples: int = 256
    seed: int = 0


DEFAULT_HCONFIG = HyperbolicityConfig()


@dataclass(frozen=True)
class HyperbolicityVerdict:
    status: Status
    method: HypMethod
    witness: tuple[Fraction, ...] | None = None
    samples: int = 0
    reason: str = ""

    def __post_init__(self):
        if self.status is Status.HYPERBOLIC and not self.method.exact:
            raise ValueError("only exact methods certify hyperbolicity")
        if self.status is Status.PROBABLY_HYPERBOLIC and self.method.exact:
            raise ValueError("exact methods decide hyperbolicity")


class CountMethod(Enum):
    EXACT_BIVARIATE = "ExactBivariate"
    EXACT_QUADRATIC = "ExactQuadratic"
    EXACT_LINEAR_PRODUCT = "ExactLinearProduct"
    EXACT_DIAGONAL_DET = "ExactDiagonalDet"


@dataclass(frozen=True)
class ConeCountReport:
    count: int
    method: CountMethod
    witnesses: tuple[tuple[Fraction, ...], ...] = field(default=())

    @property
    def pairs(self) -> int:
        return self.count // 2


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def upper_bound(n: int, d: int) -> int:
    """Maximal number of hyperbolicity cones of a degree-``d`` form in ``n`` variables."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    if d <= n:
        return 2**d
    return 2 * sum(comb(d - 1, k) for k in range(n))


def _normalized(f: MPoly, e: Sequence[Fraction]) -> MPoly:
    """``f / f(e)``; must have real coefficients."""
    fe = f.eval(e)
    g = f.scale(1 / fe)
    if not g.is_real():
        raise ValueError("f / f(e) must have real coefficients")
    return g


def _check_form(f: MPoly) -> None:
    if not f:
        raise ValueError("the zero polynomial is excluded")
    if not f.is_homogeneous():
        raise ValueError("hyperbolicity is defined for homogeneous polynomials")


def _gaussian_rational(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(round(rng.gauss(0, 1) * 2**16), 2**16) for _ in range(n))


def _line_real_rooted(g: MPoly, x: Sequence, e: Sequence) -> bool:
    p = g.restrict_line(x, e)
    return p.degree() < 1 or all_roots_real(_real_upoly(p))


def _real_upoly(p: UPoly) -> UPoly:
    lead = p.coeffs[-1]
    return UPoly([c / lead for c in p.coeffs])


def _witness_search(g: MPoly, e: Sequence, seed: int, tries: int = 64) -> tuple[Fraction, ...] | None:
    for i in range(tries):
        x = _gaussian_rational(random.Random(f"{seed}:w:{i}"), g.nvars)
        if not _line_real_rooted(g, x, e):
            return x
    return None


def _projective_roots(f: MPoly):
    """Real projective roots of a binary form: ``(all_real, slopes, infinite)``.

    ``slopes`` are isolating intervals of the distinct real roots ``a`` of
    ``f(1, a)``; ``infinite`` says whether ``(0, 1)`` is a root.
    """
    p = f.partial_eval({0: 1}).drop_vars([1]).as_univariate(0)
    infinite = p.degree() < f.degree()
    if p.degree() < 1:
        return True, [], infinite
    q = _real_upoly(p)
    if not all(c.is_real() for c in q.coeffs):
        return False, [], infinite
    real = all_roots_real(q)
    slopes = list(isolate_real_roots(q, Fraction(1, 4)).intervals)
    return real, slopes, infinite


# ---------------------------------------------------------------------------
# is_hyperbolic
# ---------------------------------------------------------------------------


def is_hyperbolic(f: Target, e: Sequence, cfg: HyperbolicityConfig = DEFAULT_HCONFIG) -> HyperbolicityVerdict:
    """Decide (or test by sampling) whether ``f`` is hyperbolic with respect to ``e``.

    ``f`` is a homogeneous polynomial, a :class:`LinearFormSet` (product of the
    forms), a :class:`HermitianPencil` (its determinant) or a tuple of those
    (their product).
    """
    e = tuple(Fraction(v) for v in e)
    if not any(e):
        raise ValueError("the direction must be nonzero")
    if isinstance(f, list):
        f = tuple(f)
    if isinstance(f, tuple):
        return _is_hyperbolic_product(f, e, cfg)
    if isinstance(f, LinearFormSet):
        _dim(f.n, e)
        if any(v == 0 for v in f.values(e)):
            return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.EXACT_LINEAR_PRODUCT, reason="vanishes at direction")
        return HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.EXACT_LINEAR_PRODUCT)
    if isinstance(f, HermitianPencil):
        return _is_hyperbolic_pencil(f, e, cfg)
    _check_form(f)
    _dim(f.nvars, e)
    if not f.eval(e):
        return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, _exact_method(f), reason="vanishes at direction")
    g = _normalized(f, e)
    if g.nvars == 1 or g.degree() == 1:
        return HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.EXACT_LINEAR_PRODUCT)
    if g.nvars == 2:
        return _bivariate(g, e)
    if g.degree() == 2:
        return _quadratic(g, e)
    forms = linear_factors(g)
    if forms is not None:
        return is_hyperbolic(forms, e, cfg)
    return _randomized(g, e, cfg)


def linear_factors(f: MPoly) -> LinearFormSet | None:
    """The distinct linear factors of ``f`` when ``f`` splits into linear forms over Q, else ``None``."""
    import sympy

    g = f.scale(1 / f.leading_term()[1])
    if not g.is_real():
        return None
    gens = sympy.symbols(f"z1:{f.nvars + 1}")
    expr = sum(
        sympy.Rational(c.re.numerator, c.re.denominator) * sympy.Mul(*[x**k for x, k in zip(gens, e)])
        for e, c in g.terms.items()
    )
    _, factors = sympy.factor_list(expr, *gens)
    forms = []
    for fac, _ in factors:
        poly = sympy.Poly(fac, *gens)
        if poly.total_degree() != 1:
            return None
        forms.append([Fraction(int(poly.coeff_monomial(x).p), int(poly.coeff_monomial(x).q)) for x in gens])
    return LinearFormSet(f.nvars, forms).deduplicate()


def _dim(n: int, e: Sequence) -> None:
    if len(e) != n:
        raise ValueError(f"dimension mismatch: direction has {len(e)} coordinates, polynomial {n}")


def _exact_method(f: MPoly) -> HypMethod:
    if f.nvars == 1 or f.degree() == 1:
        return HypMethod.EXACT_LINEAR_PRODUCT
    if f.nvars == 2:
        return HypMethod.EXACT_BIVARIATE
    if f.degree() == 2:
        return HypMethod.EXACT_QUADRATIC
    return HypMethod.RANDOMIZED


def _bivariate(g: MPoly, e: Sequence[Fraction]) -> HyperbolicityVerdict:
    real, _, _ = _projective_roots(g)
    if real:
        return HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.EXACT_BIVARIATE)
    # the line through e_perp in direction e meets every projective point except e
    x = (-e[1], e[0])
    if _line_real_rooted(g, x, e):
        x = _witness_search(g, e, 0)
    return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.EXACT_BIVARIATE, witness=x)


def _quadratic(g: MPoly, e: Sequence[Fraction]) -> HyperbolicityVerdict:
    from .improj.membership import quadratic_form

    A, _, _ = quadratic_form(g)
    pos, _, _ = inertia(A)
    if pos == 1:
        return HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.EXACT_QUADRATIC)
    # g(e) = 1 > 0, so the form is positive on a subspace of dimension >= 2
    # containing e; a vector of it that is A-orthogonal to e gives non-real roots
    n = len(e)
    Ae = [sum(A[i][j] * e[j] for j in range(n)) for i in range(n)]
    basis = []
    for j in range(n):
        # x_j = unit_j - (A e)_j e, A-orthogonal to e because e^T A e = 1
        basis.append([Fraction(int(i == j)) - Ae[j] * e[i] for i in range(n)])
    M = [[sum(basis[a][i] * A[i][k] * basis[b][k] for i in range(n) for k in range(n)) for b in range(n)] for a in range(n)]
    D, P = congruence_diagonalize(M)
    k = next(k for k, d in enumerate(D) if d > 0)
    x = tuple(sum(P[a][k] * basis[a][i] for a in range(n)) for i in range(n))
    return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.EXACT_QUADRATIC, witness=x)


def _randomized(g: MPoly, e: Sequence[Fraction], cfg: HyperbolicityConfig) -> HyperbolicityVerdict:
    for i in range(cfg.samples):
        x = _gaussian_rational(random.Random(f"{cfg.seed}:{i}"), g.nvars)
        if not _line_real_rooted(g, x, e):
            return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.RANDOMIZED, witness=x, samples=i + 1)
    return HyperbolicityVerdict(Status.PROBABLY_HYPERBOLIC, HypMethod.RANDOMIZED, samples=cfg.samples)


def diagonal_forms(p: HermitianPencil) -> LinearFormSet:
    """The linear forms on the diagonal of a diagonal pencil."""
    return LinearFormSet(p.n, [[m[i][i].re for m in p.mats] for i in range(p.d)])


def _is_hyperbolic_pencil(p: HermitianPencil, e: Sequence[Fraction], cfg: HyperbolicityConfig) -> HyperbolicityVerdict:
    _dim(p.n, e)
    if p.is_diagonal:
        v = is_hyperbolic(diagonal_forms(p), e, cfg)
        return HyperbolicityVerdict(v.status, HypMethod.EXACT_DIAGONAL_DET, v.witness, reason=v.reason)
    if p.det_at(e) == 0:
        return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.EXACT_HERMITIAN_PENCIL, reason="vanishes at direction")
    if p.definiteness(e) != 0:
        return HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.EXACT_HERMITIAN_PENCIL)
    if p.d > MAX_EXPAND:
        g = None
    else:
        g = p.expand()
    if g is not None and (g.nvars == 2 or g.degree() <= 2):
        return is_hyperbolic(g, e, cfg)
    # sample lines straight from the matrices
    for i in range(cfg.samples):
        x = _gaussian_rational(random.Random(f"{cfg.seed}:{i}"), p.n)
        q = p.line_poly(x, e)
        if q.degree() >= 1 and not all_roots_real(_real_upoly(_realify(q))):
            return HyperbolicityVerdict(Status.NOT_HYPERBOLIC, HypMethod.RANDOMIZED, witness=x, samples=i + 1)
    return HyperbolicityVerdict(Status.PROBABLY_HYPERBOLIC, HypMethod.RANDOMIZED, samples=cfg.samples)


def _realify(q: UPoly) -> UPoly:
    # determinants of Hermitian matrices are real
    return UPoly([CQ(as_cq(c).re) for c in q.coeffs])


def _is_hyperbolic_product(fs: tuple, e: Sequence[Fraction], cfg: HyperbolicityConfig) -> HyperbolicityVerdict:
    """A product is hyperbolic iff every factor is (the roots on a line are the union)."""
    verdicts = [is_hyperbolic(g, e, cfg) for g in fs]
    for v in verdicts:
        if v.status is Status.NOT_HYPERBOLIC:
            return v
    if all(v.status is Status.HYPERBOLIC for v in verdicts):
        linear = all(isinstance(g, MPoly) and g.degree() == 1 for g in fs)
        method = HypMethod.EXACT_LINEAR_PRODUCT if linear else verdicts[0].method
        return HyperbolicityVerdict(Status.HYPERBOLIC, method)
    return next(v for v in verdicts if v.status is Status.PROBABLY_HYPERBOLIC)


# ---------------------------------------------------------------------------
# cone membership
# ---------------------------------------------------------------------------


def _line(f: Target, x: Sequence, e: Sequence) -> UPoly:
    if isinstance(f, tuple):
        out = UPoly([1])
        for g in f:
            out = out * _line(g, x, e)
        return out
    if isinstance(f, LinearFormSet):
        return _line(f.polynomial(), x, e)
    if isinstance(f, HermitianPencil):
        return _realify(f.line_poly(x, e))
    return f.restrict_line(x, e)


def cone_membership(f: Target, e: Sequence, v: Sequence, cfg: HyperbolicityConfig = DEFAULT_HCONFIG) -> bool:
    """Whether ``v`` lies in the (open) hyperbolicity cone ``C(e)``.

    ``v`` is in ``C(e)`` iff ``f(v + t e)`` does not vanish at ``t = 0`` and has
    no positive real root.
    """
    if isinstance(f, list):
        f = tuple(f)
    verdict = is_hyperbolic(f, e, cfg)
    if verdict.status is Status.NOT_HYPERBOLIC:
        raise ValueError("e is not a hyperbolicity direction of f")
    e = tuple(Fraction(c) for c in e)
    v = tuple(Fraction(c) for c in v)
    p = _line(f, v, e)
    if not p or not p.coeffs[0]:
        return False
    if p.degree() < 1:
        return True
    q = _real_upoly(p)
    if not all(c.is_real() for c in q.coeffs):
        raise ValueError("f / f(e) must have real coefficients")
    return count_real_roots(q, (Fraction(0), None)) == 0


# ---------------------------------------------------------------------------
# cone counts
# ---------------------------------------------------------------------------


def count_cones_bivariate(f: MPoly) -> ConeCountReport:
    """``2k`` for a binary form with ``k`` distinct real projective roots, all roots real; else ``0``."""
    _check_form(f)
    if f.nvars != 2:
        raise ValueError("expected a binary form")
    if f.degree() < 1:
        raise ValueError("a constant has no cone structure")
    if not _normal_real(f):
        raise ValueError("expected real coefficients up to a constant factor")
    real, slopes, infinite = _projective_roots(f)
    if not real:
        return ConeCountReport(0, CountMethod.EXACT_BIVARIATE)
    # one direction per sector between consecutive root lines
    dirs: list[tuple[Fraction, Fraction]] = []
    for (_, hi), (lo, _) in zip(slopes, slopes[1:]):
        dirs.append((Fraction(1), (hi + lo) / 2))
    if infinite:
        if slopes:
            dirs.append((Fraction(1), slopes[-1][1] + 1))
            dirs.append((Fraction(1), slopes[0][0] - 1))
        else:
            dirs.append((Fraction(1), Fraction(0)))
    else:
        dirs.append((Fraction(0), Fraction(1)))
    witnesses = tuple(w for d in dirs for w in (d, (-d[0], -d[1])))
    return ConeCountReport(len(witnesses), CountMethod.EXACT_BIVARIATE, witnesses)


def _normal_real(f: MPoly) -> bool:
    _, c = f.leading_term()
    return f.scale(1 / c).is_real()


def count_cones_linear_product(fs: LinearFormSet) -> ConeCountReport:
    """Number of chambers of the arrangement of the distinct hyperplanes."""
    if fs.d < 1:
        raise ValueError("need at least one form")
    chs = chambers(fs.deduplicate())
    return ConeCountReport(len(chs), CountMethod.EXACT_LINEAR_PRODUCT, tuple(c.witness for c in chs))


def count_cones_quadratic(f: MPoly) -> ConeCountReport:
    """Cones of a real quadratic form by signature up to sign: (1, 1) four, (1, 0) or (1, m >= 2) two, else none."""
    _check_form(f)
    if f.degree() != 2:
        raise ValueError("expected a quadratic form")
    from .improj.membership import quadratic_form

    g = f.scale(1 / f.leading_term()[1])
    if not g.is_real():
        raise ValueError("expected real coefficients up to a constant factor")
    A, _, _ = quadratic_form(g)
    D, P = congruence_diagonalize(A)
    pos = [k for k, d in enumerate(D) if d > 0]
    neg = [k for k, d in enumerate(D) if d < 0]
    n = len(A)

    def column(k):
        c = tuple(P[i][k] for i in range(n))
        return (c, tuple(-x for x in c))

    if len(pos) == 1 and len(neg) == 1:
        # two distinct real planes: four chambers, two on each side of f = 0
        return ConeCountReport(4, CountMethod.EXACT_QUADRATIC, column(pos[0]) + column(neg[0]))
    for one in (pos, neg):
        if len(one) == 1:
            return ConeCountReport(2, CountMethod.EXACT_QUADRATIC, column(one[0]))
    return ConeCountReport(0, CountMethod.EXACT_QUADRATIC)


def count_cones(f: Target) -> ConeCountReport:
    """Route to the exact cone count for the class of ``f``."""
    if isinstance(f, LinearFormSet):
        return count_cones_linear_product(f)
    if isinstance(f, HermitianPencil):
        if f.is_diagonal:
            r = count_cones_linear_product(diagonal_forms(f))
            return ConeCountReport(r.count, CountMethod.EXACT_DIAGONAL_DET, r.witnesses)
        if f.d > MAX_EXPAND:
            raise ValueError("no exact cone count for this pencil")
        return count_cones(f.expand())
    _check_form(f)
    if f.degree() < 1:
        raise ValueError("a constant has no cone structure")
    if f.nvars == 1:
        return ConeCountReport(2, CountMethod.EXACT_LINEAR_PRODUCT, ((Fraction(1),), (Fraction(-1),)))
    if f.degree() == 1:
        g = f.scale(1 / f.leading_term()[1])
        if not g.is_real():
            # real and imaginary parts independent: I(f) is everything
            return ConeCountReport(0, CountMethod.EXACT_LINEAR_PRODUCT)
        a = [g.terms.get(tuple(int(i == j) for i in range(f.nvars)), CQ(0)).re for j in range(f.nvars)]
        return count_cones_linear_product(LinearFormSet(f.nvars, [a]))
    if f.nvars == 2:
        return count_cones_bivariate(f)
    if f.degree() == 2:
        return count_cones_quadratic(f)
    forms = linear_factors(f)
    if forms is not None:
        return count_cones_linear_product(forms)
    raise ValueError("no exact cone count for this polynomial class")
