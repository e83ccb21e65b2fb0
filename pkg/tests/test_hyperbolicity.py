import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercone.algebra import MPoly
from hypercone.arrangement import LinearFormSet, chambers
from hypercone.hyperbolicity import (
    CountMethod,
    HyperbolicityConfig,
    HyperbolicityVerdict,
    HypMethod,
    Status,
    cone_membership,
    count_cones,
    count_cones_bivariate,
    count_cones_linear_product,
    count_cones_quadratic,
    is_hyperbolic,
    linear_factors,
    upper_bound,
)
from hypercone.improj.pencil import HermitianPencil
from hypercone.linalg import congruence_diagonalize, inertia, matmul
from hypercone.realroots import all_roots_real

z1, z2 = MPoly.gens(2)
w1, w2, w3 = MPoly.gens(3)
LORENTZ3 = w1**2 - w2**2 - w3**2


# -- is_hyperbolic --------------------------------------------------------------------


def test_lorentz_hyperbolic():
    v = is_hyperbolic(LORENTZ3, (1, 0, 0))
    assert v.status is Status.HYPERBOLIC and v.method is HypMethod.EXACT_QUADRATIC


def test_coordinate_product_hyperbolic():
    v = is_hyperbolic(w1 * w2 * w3, (1, 1, 1))
    assert v.status is Status.HYPERBOLIC and v.method is HypMethod.EXACT_LINEAR_PRODUCT


def test_sum_of_squares_not_hyperbolic():
    v = is_hyperbolic(z1**2 + z2**2, (1, 0))
    assert v.status is Status.NOT_HYPERBOLIC
    assert v.witness == (0, 1)


def test_lorentz_outside_cone_direction():
    v = is_hyperbolic(LORENTZ3, (0, 1, 0))
    assert v.status is Status.NOT_HYPERBOLIC
    assert not all_roots_real(LORENTZ3.restrict_line(v.witness, (0, 1, 0)).monic())


def test_vanishing_direction():
    v = is_hyperbolic(z1 * z2, (1, 0))
    assert v.status is Status.NOT_HYPERBOLIC and v.reason == "vanishes at direction"


def test_non_homogeneous_rejected():
    with pytest.raises(ValueError):
        is_hyperbolic(z1**2 - 1, (1, 0))


def test_randomized_route_is_never_certified():
    # an irreducible cubic in three variables
    f = w1 * (w1**2 - w2**2 - w3**2) + w3**3 * Fraction(1, 100)
    v = is_hyperbolic(f, (1, 0, 0), HyperbolicityConfig(samples=64, seed=3))
    assert v.method is HypMethod.RANDOMIZED
    assert v.status in (Status.PROBABLY_HYPERBOLIC, Status.NOT_HYPERBOLIC)


def test_verdict_invariants():
    with pytest.raises(ValueError):
        HyperbolicityVerdict(Status.HYPERBOLIC, HypMethod.RANDOMIZED)
    with pytest.raises(ValueError):
        HyperbolicityVerdict(Status.PROBABLY_HYPERBOLIC, HypMethod.EXACT_QUADRATIC)


def test_pencil_hyperbolicity():
    pauli = HermitianPencil([[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]]])
    assert is_hyperbolic(pauli, (1, 0, 0)).status is Status.HYPERBOLIC
    assert is_hyperbolic(pauli, (0, 1, 0)).status is Status.NOT_HYPERBOLIC


def test_product_tuple_route():
    assert is_hyperbolic((LORENTZ3, w1), (1, 0, 0)).status is Status.HYPERBOLIC
    assert is_hyperbolic((LORENTZ3, w2), (1, 0, 0)).status is Status.NOT_HYPERBOLIC


# -- cone membership -----------------------------------------------------------------


def test_cone_membership_examples():
    assert cone_membership(LORENTZ3, (1, 0, 0), (2, 1, 1))
    assert not cone_membership(LORENTZ3, (1, 0, 0), (-2, 0, 0))
    assert not cone_membership(LORENTZ3, (1, 0, 0), (1, 1, 0))


def test_cone_membership_requires_hyperbolic_direction():
    with pytest.raises(ValueError):
        cone_membership(z1**2 + z2**2, (1, 0), (1, 1))


# -- cone counts ----------------------------------------------------------------------


def test_count_bivariate_examples():
    assert count_cones_bivariate(z1**2 - z2**2).count == 4
    assert count_cones_bivariate(z1**2 + z2**2).count == 0
    assert count_cones_bivariate(z1).count == 2


def test_count_bivariate_witnesses_are_directions():
    f = z1 * (z1 - z2) ** 2 * (z1 + 3 * z2)
    rep = count_cones_bivariate(f)
    assert rep.count == 6
    for w in rep.witnesses:
        assert is_hyperbolic(f, w).status is Status.HYPERBOLIC


def test_count_linear_product_examples():
    coord = LinearFormSet(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert count_cones_linear_product(coord).count == 8
    four = LinearFormSet(2, [[1, 0], [0, 1], [1, 1], [1, -1]])
    assert count_cones_linear_product(four).count == 8 == len(chambers(four))
    assert count_cones_linear_product(LinearFormSet(2, [[1, 0], [1, 0]])).count == 2


def test_count_quadratic_signatures():
    assert count_cones_quadratic(LORENTZ3).count == 2
    assert count_cones_quadratic(w1 * w2 + 0 * w3).count == 4
    assert count_cones_quadratic(w1**2 + 0 * w3).count == 2
    assert count_cones_quadratic(w1**2 + w2**2 + 0 * w3).count == 0
    assert count_cones_quadratic(-LORENTZ3).count == 2


def test_count_dispatch():
    assert count_cones(LinearFormSet(2, [[1, 0], [0, 1]])).method is CountMethod.EXACT_LINEAR_PRODUCT
    diag = HermitianPencil([[[1, 0], [0, 1]], [[1, 0], [0, -1]]])
    assert count_cones(diag).method is CountMethod.EXACT_DIAGONAL_DET
    assert count_cones(diag).count == 4
    assert count_cones(w1 * w2 * w3).count == 8
    with pytest.raises(ValueError):
        count_cones(w1**3 + w2**3 + w3**3 - w1 * w2 * w3)


def test_linear_factors():
    fs = linear_factors((w1 + w2) * (w1 - 2 * w3) ** 2)
    assert fs is not None and fs.d == 2
    assert linear_factors(LORENTZ3) is None


def test_upper_bound_examples():
    assert upper_bound(3, 2) == 4
    assert upper_bound(2, 5) == 10
    assert upper_bound(1, 7) == 2


def test_congruence_diagonalization():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 4)
        a = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = Fraction(rng.randint(-3, 3))
        d, p = congruence_diagonalize(a)
        pt = [list(r) for r in zip(*p)]
        prod = matmul(matmul(pt, a), p)
        assert all(prod[i][j] == (d[i] if i == j else 0) for i in range(n) for j in range(n))
        pos, neg = sum(x > 0 for x in d), sum(x < 0 for x in d)
        assert (pos, neg) == inertia(a)[:2]


# -- properties -----------------------------------------------------------------------------


@st.composite
def hyperbolic_instances(draw):
    """A product of a few real linear forms in three variables with a direction off the hyperplanes."""
    k = draw(st.integers(1, 4))
    forms = []
    for _ in range(k):
        a = [draw(st.integers(-3, 3)) for _ in range(3)]
        if not any(a):
            a[2] = 1
        forms.append(a)
    fs = LinearFormSet(3, forms)
    e = [draw(st.integers(-3, 3)) for _ in range(3)]
    return fs, e


@settings(max_examples=200)
@given(hyperbolic_instances(), st.lists(st.fractions(-3, 3, max_denominator=4), min_size=6, max_size=6),
       st.fractions(Fraction(1, 5), 5, max_denominator=5), st.fractions(Fraction(1, 5), 5, max_denominator=5))
def test_cone_is_convex(inst, coords, lam, mu):
    fs, e = inst
    if not any(e) or any(v == 0 for v in fs.values(e)):
        return
    f = fs.polynomial()
    assert is_hyperbolic(f, e).status is Status.HYPERBOLIC
    assert cone_membership(f, e, e)
    v, w = tuple(coords[:3]), tuple(coords[3:])
    if cone_membership(f, e, v) and cone_membership(f, e, w):
        assert cone_membership(f, e, tuple(lam * a + mu * b for a, b in zip(v, w)))
    if cone_membership(f, e, v):
        assert is_hyperbolic(f, v).status is not Status.NOT_HYPERBOLIC


@settings(max_examples=200)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5), st.integers(0, 2))
def test_counts_even_and_bounded(pairs, extra):
    forms = [(a, b) if (a, b) != (0, 0) else (1, 0) for a, b in pairs]
    f = MPoly.const(1, 2)
    for a, b in forms:
        f = f * (a * z1 + b * z2)
    for _ in range(extra):
        f = f * (z1**2 + z1 * z2 + z2**2)
    c = count_cones(f).count
    assert c % 2 == 0 and c <= upper_bound(2, f.degree())


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_product_at_most_doubles(forms):
    forms = [a if any(a) else [0, 0, 1] for a in forms]
    f2 = LinearFormSet(3, forms).polynomial()
    both = LinearFormSet(3, forms + [[1, -1, 2]]).polynomial()
    assert count_cones(both).count <= 2 * count_cones(f2).count


@settings(max_examples=200)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_lorentz_transforms_have_two_cones(m):
    rows = [m[0:3], m[3:6], m[6:9]]
    from hypercone.linalg import det

    if det(rows) == 0:
        return
    sub = [sum((c * g for c, g in zip(r, (w1, w2, w3))), MPoly.zero(3)) for r in rows]
    f = LORENTZ3.compose(sub)
    assert count_cones(f).count == 2
