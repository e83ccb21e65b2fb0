"""Seeded property suites: union rule, symmetry, cone scaling, real-variety
inclusion, Sturm/numeric consistency and the parser round-trip."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mpolys
from hypercone.algebra import CQ, MPoly, UPoly
from hypercone.improj.membership import Method, membership
from hypercone.polytext import parse_poly, serialize
from hypercone.realroots import count_real_roots, roots_complex_numeric

z1, z2 = MPoly.gens(2)
CASES = 200

coords = st.fractions(min_value=-4, max_value=4, max_denominator=4)
# Small Gaussian-integer factors keep the exact oracle on the product cheap.
factors = mpolys(max_degree=2, max_terms=3, parts=st.integers(-2, 2).map(Fraction))
scales = st.fractions(min_value=Fraction(1, 8), max_value=8, max_denominator=8)


@st.composite
def binary_forms(draw, max_degree=4, real=True):
    """Homogeneous bivariate polynomials."""
    d = draw(st.integers(1, max_degree))
    ints = st.integers(-3, 3)
    terms = {}
    for k in range(d + 1):
        re = draw(ints)
        im = 0 if real else draw(ints)
        terms[(k, d - k)] = CQ(re, im)
    f = MPoly(2, terms)
    return f if f else z1**d


@st.composite
def ternary_quadrics(draw):
    ints = st.integers(-3, 3)
    vals = [draw(ints) for _ in range(6)]
    w = MPoly.gens(3)
    pairs = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)]
    f = MPoly.zero(3)
    for (i, j), c in zip(pairs, vals):
        f = f + c * w[i] * w[j]
    return f if f else w[0] ** 2


def _exact(m):
    assert m.method.exact
    return m.inside


@settings(max_examples=CASES)
@given(factors, factors, coords, coords)
def test_union_rule(f, g, y1, y2):
    if f.degree() < 1 or g.degree() < 1:
        return
    y = (y1, y2)
    whole = _exact(membership(f * g, y))
    assert whole == (_exact(membership(f, y)) or _exact(membership(g, y)))
    assert whole == _exact(membership((f, g), y))


@settings(max_examples=CASES)
@given(st.one_of(binary_forms(), ternary_quadrics()), st.lists(coords, min_size=3, max_size=3))
def test_plus_minus_symmetry(f, ys):
    y = tuple(ys[: f.nvars])
    assert _exact(membership(f, y)) == _exact(membership(f, tuple(-v for v in y)))


@settings(max_examples=CASES)
@given(st.one_of(binary_forms(real=False), ternary_quadrics()), st.lists(coords, min_size=3, max_size=3), scales)
def test_cone_scaling(f, ys, lam):
    y = tuple(ys[: f.nvars])
    if _exact(membership(f, y)):
        assert _exact(membership(f, tuple(lam * v for v in y)))


@settings(max_examples=CASES)
@given(binary_forms(max_degree=3), ternary_quadrics(), st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.booleans())
def test_real_variety_inclusion(g, q, x, use_quadric):
    if not any(x):
        x = [1, 0, 0]
    if use_quadric:
        w = MPoly.gens(3)
        norm = sum(v * v for v in x)
        f = q - (w[0] ** 2 + w[1] ** 2 + w[2] ** 2).scale(q.eval(x) / norm)
        pt = tuple(x)
        if f.is_zero():
            return
        assert f.eval(pt) == 0
        m = membership(f, pt)
        assert m.method is Method.EXACT_QUADRATIC and m.inside
    else:
        a1, a2 = x[0], x[1] if (x[0], x[1]) != (0, 0) else 1
        f = (a1 * z1 + a2 * z2) * g
        pt = (Fraction(-a2), Fraction(a1))
        assert f.eval(pt) == 0
        assert _exact(membership(f, pt))


@settings(max_examples=CASES)
@given(
    st.lists(st.integers(-12, 12), min_size=1, max_size=5, unique=True),
    st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), max_size=2),
)
def test_sturm_matches_numeric_roots(halves, pairs):
    p = UPoly.from_roots([Fraction(h, 2) for h in halves])
    for a, b in pairs:
        p = p * UPoly([a * a + b * b, -2 * a, 1])
    real = sorted(z.real for z in roots_complex_numeric(p, 1e-10) if abs(z.imag) < 1e-6)
    distinct = [r for k, r in enumerate(real) if k == 0 or r - real[k - 1] > 1e-6]
    assert count_real_roots(p) == len(distinct) == len(halves)


@settings(max_examples=CASES)
@given(st.integers(1, 4).flatmap(lambda n: mpolys(nvars=n, max_degree=4, max_terms=6)))
def test_parser_round_trip(f):
    assert parse_poly(serialize(f), f.nvars) == f
