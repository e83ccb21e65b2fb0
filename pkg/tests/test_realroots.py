import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercone.algebra import CQ, UPoly
from hypercone.realroots import (
    all_roots_real,
    count_real_roots,
    isolate_real_roots,
    refine_interval,
    roots_complex_numeric,
    squarefree,
    sturm_chain,
    to_int_poly,
    yun_int,
)

T = UPoly([0, 1])


def P(*coeffs):
    return UPoly(list(coeffs))


# -- squarefree ------------------------------------------------------------------


def test_squarefree_examples():
    assert squarefree((T - 1) ** 2 * (T + 2)) == ((T - 1) * (T + 2)).monic()
    assert squarefree(T**2 + 1) == T**2 + 1
    assert squarefree(T**3) == T


def test_squarefree_zero_raises():
    with pytest.raises(ValueError):
        squarefree(UPoly([]))


def test_yun_non_monic_factors():
    # regression: integer-scaled Yun lost scalar bookkeeping on non-monic factors
    p = (2 * T + 1) * (3 * T - 1) ** 2 * (T + 5) ** 3
    parts = dict((i, a) for a, i in yun_int(to_int_poly(p)))
    assert parts[1] == to_int_poly(2 * T + 1)
    assert parts[2] == to_int_poly(3 * T - 1)
    assert parts[3] == to_int_poly(T + 5)


# -- Sturm counts ----------------------------------------------------------------


def test_count_real_roots_examples():
    assert count_real_roots(T**3 - 3 * T) == 3
    assert count_real_roots(T**2 + 1) == 0
    assert count_real_roots(T**2 - 1, (Fraction(0), None)) == 1


def test_count_half_open_interval():
    p = (T - 1) * (T - 2)
    assert count_real_roots(p, (Fraction(1), Fraction(2))) == 1
    assert count_real_roots(p, (Fraction(0), Fraction(1))) == 1


def test_sturm_chain_squarefree_flag():
    assert sturm_chain(T**2 - 2).is_squarefree
    assert not sturm_chain((T - 1) ** 2).is_squarefree


def test_all_roots_real_examples():
    assert all_roots_real(T**2)
    assert not all_roots_real(T**2 + 1)
    assert all_roots_real((T**2 - 2) * (T - 5))


def test_zero_polynomial_raises():
    with pytest.raises(ValueError):
        count_real_roots(UPoly([]))
    with pytest.raises(ValueError):
        all_roots_real(UPoly([]))


# -- isolation ---------------------------------------------------------------------


def test_isolate_examples():
    iso = isolate_real_roots(1 - T**2)
    assert len(iso) == 2 and iso.multiplicities == (1, 1)
    assert iso.intervals[0][0] <= -1 <= iso.intervals[0][1]
    assert iso.intervals[1][0] <= 1 <= iso.intervals[1][1]
    iso = isolate_real_roots((T - 1) ** 2)
    assert len(iso) == 1 and iso.multiplicities == (2,)
    assert iso.intervals[0][0] <= 1 <= iso.intervals[0][1]


def test_isolate_cubic_against_float_roots():
    iso = isolate_real_roots(T**3 - 3 * T, Fraction(1, 100))
    expected = sorted(np.roots([1, 0, -3, 0]).real)
    assert len(iso) == 3
    for (lo, hi), r in zip(iso.intervals, expected):
        assert hi - lo <= Fraction(1, 100)
        assert float(lo) <= r <= float(hi)
    assert expected[0] == pytest.approx(-math.sqrt(3))


def test_refine_keeps_root():
    # regression: refine_interval once returned the half without the root
    p = to_int_poly(T**2 - 2)
    lo, hi = Fraction(1), Fraction(2)
    for _ in range(30):
        lo, hi = refine_interval(p, lo, hi)
        assert lo <= Fraction(math.sqrt(2)) <= hi or lo == hi
    assert float(hi - lo) < 1e-8


# -- numeric roots -----------------------------------------------------------------


def test_numeric_roots_examples():
    rs = sorted(roots_complex_numeric(T**2 + 1), key=lambda z: z.imag)
    assert rs[0] == pytest.approx(-1j) and rs[1] == pytest.approx(1j)
    (r,) = roots_complex_numeric(T - UPoly([CQ(2, 3)]))
    assert r == pytest.approx(2 + 3j)
    assert sorted(z.real for z in roots_complex_numeric(1 - T**2)) == pytest.approx([-1, 1])


def test_numeric_roots_multiplicity():
    rs = roots_complex_numeric((T - 1) ** 3 * (T + 2))
    assert len(rs) == 4
    assert sum(abs(z - 1) < 1e-6 for z in rs) == 3


# -- properties -----------------------------------------------------------------------

roots_st = st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=6)
cplx_st = st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 4)), max_size=2)


def _with_complex_pairs(pairs):
    p = UPoly([1])
    for a, b in pairs:
        p = p * (T**2 - 2 * a * T + (a * a + b * b))
    return p


@settings(max_examples=200)
@given(roots_st, cplx_st)
def test_planted_roots_are_counted(roots, pairs):
    p = UPoly.from_roots(roots) * _with_complex_pairs(pairs)
    assert count_real_roots(p) == len(set(roots))
    assert len(isolate_real_roots(p)) == count_real_roots(p)


@settings(max_examples=200)
@given(roots_st, cplx_st, roots_st, cplx_st)
def test_all_roots_real_multiplicative(r1, c1, r2, c2):
    p = UPoly.from_roots(r1) * _with_complex_pairs(c1)
    q = UPoly.from_roots(r2) * _with_complex_pairs(c2)
    assert all_roots_real(p * q) == (all_roots_real(p) and all_roots_real(q))


@settings(max_examples=200)
@given(roots_st)
def test_numeric_roots_of_real_rooted_are_real(roots):
    p = UPoly.from_roots(roots)
    assert all_roots_real(p)
    tol = 1e-9
    for z in roots_complex_numeric(p, tol):
        assert abs(z.imag) <= 1e-6
