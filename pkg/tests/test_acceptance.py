"""Acceptance suite: one test per criterion.

Each test records a detail line; the terminal summary prints one
``criterion N: PASS/FAIL`` line per test (see ``conftest.py``).
"""

import random
import time
from fractions import Fraction

import test_properties as props
from hypercone import constructions as C
from hypercone.algebra import CQ, MPoly
from hypercone.arrangement import UnionSide, arrangement_membership, chambers, general_position, zaslavsky_central
from hypercone.hyperbolicity import count_cones, upper_bound
from hypercone.improj import asymptotics as A
from hypercone.improj import raster as R
from hypercone.improj.membership import Method, membership
from hypercone.improj.pencil import HermitianPencil

z1, z2 = MPoly.gens(2)
w1, w2, w3 = MPoly.gens(3)


def _rat(rng, lo=-3, hi=3, den=8):
    return Fraction(rng.randint(lo * den, hi * den), den)


def _product(fs):
    out = MPoly.const(1, fs[0].nvars)
    for f in fs:
        out = out * f
    return out


def _distinct_forms(rng, k, with_z1):
    """``k`` pairwise non-proportional real linear binary forms."""
    slopes = set()
    forms = []
    if with_z1:
        forms.append(z1)
        slopes.add(None)
    while len(forms) < k:
        a, b = rng.randint(-5, 5), rng.randint(1, 5)
        s = Fraction(a, b)
        if s in slopes:
            continue
        slopes.add(s)
        forms.append(a * z1 + b * z2 if rng.random() < 0.5 else -(a * z1 + b * z2))
    return forms


def test_criterion_1_bivariate_cone_counts(record):
    rng = random.Random(1)
    worst = 0.0
    for i in range(25):
        k = rng.randint(1, 6)
        f = _product(_distinct_forms(rng, k, with_z1=i % 2 == 0))
        t = time.perf_counter()
        got = count_cones(f).count
        worst = max(worst, time.perf_counter() - t)
        assert got == 2 * k, (f.to_text(), got)
    for i in range(10):
        b = rng.randint(-3, 3)
        a = rng.randint(1, 3)
        c = Fraction(b * b, 4 * a) + rng.randint(1, 4)
        quad = a * z1**2 + b * z1 * z2 + c * z2**2
        f = _product([quad] + _distinct_forms(rng, rng.randint(0, 4), with_z1=i % 2 == 0)) if i else quad
        t = time.perf_counter()
        got = count_cones(f).count
        worst = max(worst, time.perf_counter() - t)
        assert got == 0, (f.to_text(), got)
    assert worst < 1.0
    record(f"25 products give 2k, 10 with a definite quadratic give 0; slowest {worst:.3f} s")


SPEC_LISTED = {(2, 4): 8, (3, 3): 8, (3, 5): 26, (4, 4): 16}


def test_criterion_2_sharp_bound(record):
    parts = []
    for (n, d), listed in SPEC_LISTED.items():
        fs = C.random_independent_linear(n, d, seed=n * 100 + d)
        t = time.perf_counter()
        got = len(chambers(fs))
        dt = time.perf_counter() - t
        bound = upper_bound(n, d)
        assert got == bound and dt < 10
        parts.append(f"({n},{d}) {got}={bound}" + ("" if listed == bound else f" [listed {listed}]"))
    record("; ".join(parts))


def test_criterion_3_zaslavsky_degenerate(record):
    # three forms through a common line in R^3 plus one generic form
    from hypercone.arrangement import LinearFormSet

    fs = LinearFormSet(3, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 3]])
    got = len(chambers(fs))
    formula = zaslavsky_central(3, 4)
    assert not general_position(fs)
    assert got < formula
    record(f"{got} chambers < {formula}; general_position=False")


def test_criterion_4_lorentz(record):
    rng = random.Random(4)
    f = C.lorentz(3).poly
    t = time.perf_counter()
    for _ in range(10**4):
        y = tuple(_rat(rng) for _ in range(3))
        m = membership(f, y)
        assert m.method is Method.EXACT_QUADRATIC
        assert m.inside == (y[0] ** 2 - y[1] ** 2 - y[2] ** 2 <= 0), y
    dt = time.perf_counter() - t
    assert dt < 30
    record(f"10^4 points agree with y1^2-y2^2-y3^2 <= 0 in {dt:.1f} s")


def _random_pencil(rng, d, n):
    mats = []
    for _ in range(n):
        m = [[CQ(0)] * d for _ in range(d)]
        for i in range(d):
            m[i][i] = CQ(rng.randint(-3, 3))
            for j in range(i + 1, d):
                c = CQ(rng.randint(-2, 2), rng.randint(-2, 2))
                m[i][j], m[j][i] = c, c.conjugate()
        mats.append(m)
    return HermitianPencil(mats)


def test_criterion_5_pencil_vs_expansion(record):
    rng = random.Random(5)
    pencils = [C.pauli_pencil().pencil, _random_pencil(rng, 2, 2), _random_pencil(rng, 3, 2)]
    inside = 0
    for p in pencils:
        f = p.expand()
        assert f.degree() >= 1
        for _ in range(10**3):
            y = tuple(_rat(rng) for _ in range(p.n))
            a, b = membership(p, y), membership(f, y)
            assert a.method is Method.EXACT_HERMITIAN_PENCIL and b.method.exact
            assert a.value is b.value, (y, a, b)
            inside += a.inside
    record(f"3 pencils x 10^3 points agree ({inside} Inside)")


def _on_or_off(rng, fs):
    """A random point, projected onto a random hyperplane half of the time."""
    y = [_rat(rng) for _ in range(fs.n)]
    if rng.random() < 0.5:
        a = fs.forms[rng.randrange(fs.d)]
        k = next(j for j, c in enumerate(a) if c)
        y[k] -= sum(c * v for c, v in zip(a, y)) / a[k]
    return tuple(y)


def test_criterion_6_diagonal_determinant(record):
    rng = random.Random(6)
    inside = 0
    for _ in range(5):
        n, d = rng.randint(2, 3), rng.randint(2, 4)
        rows = []
        while len(rows) < d:
            row = [rng.randint(-3, 3) for _ in range(n)]
            if any(row):
                rows.append(row)
        e = C.diag_det(rows)
        for _ in range(10**3):
            y = _on_or_off(rng, e.forms)
            m = membership(e.pencil, y)
            assert m.method is Method.EXACT_DIAGONAL_DET
            assert m.inside == (arrangement_membership(e.forms, y) is UnionSide.INSIDE), (rows, y)
            if n == 2:
                assert membership(e.poly, y).value is m.value
            inside += m.inside
    record(f"5 instances x 10^3 points agree ({inside} Inside); bivariate ones also match the resultant route")


BOX6 = (-6, 6, -6, 6)


def test_criterion_7_strictly_convex_construction(record):
    t = time.perf_counter()
    e = C.p_K2(4, r=5)
    rep = R.components(R.raster(e.target, BOX6, 512))
    convex = sum(c.strictly_convex for c in rep.components if not c.touches_boundary)
    cross = R.components(R.raster(C.coordinate_product(2).poly, BOX6, 512))
    dt = time.perf_counter() - t
    assert rep.bounded == 8 and convex >= 4
    assert (cross.unbounded, cross.bounded) == (4, 0)
    assert not any(c.strictly_convex for c in cross.components)
    assert dt < 300
    record(f"p_4,2: {rep.bounded} bounded, {convex} strictly convex; z1z2: 4 unbounded; {dt:.0f} s")


CUBIC = z1**3 - 2 * z1**2 * z2 + z1 * z2**2 + z1 + z2 + 1


def test_criterion_8_six_components(record):
    t = time.perf_counter()
    rep = A.recession_correspondence(CUBIC, box=(-4, 4, -4, 4), resolution=512)
    dt = time.perf_counter() - t
    assert rep.init_components == 4
    assert rep.f_components == 6
    assert len(rep.matches) == 4 and rep.bijective
    assert dt < 300
    record(f"{rep.f_components} components, {len(rep.matches)} matched to 4 sectors, {len(rep.thin)} thin; {dt:.0f} s")


def test_criterion_9_limit_directions(record):
    f = z1**2 - z2**2 - 1
    ld = A.limit_directions(f)
    assert ld.kind is A.DirectionKind.FINITE_SET and len(ld.dirs) == 4
    angles, pixel = A.far_field_angles(R.raster(f, (-10, 10, -10, 10), 512))
    assert len(angles) == 4
    off = max(min(A.angular_distance(a, b) for b in ld.angles()) for a in angles)
    assert off <= pixel
    assert A.limit_directions(z1**2 + z2**2 + 1).kind is A.DirectionKind.FULL_CIRCLE
    record(f"4 directions, far-field offset {off / pixel:.2f} px; disk quadric FullCircle")


def test_criterion_10_homogenization(record):
    parts = []
    for f in (z1**2 - z2**2 - 1, z1**2 + z2**2 + 25):
        rep = A.verify_homogenization(f, samples=200, seed=10)
        assert len(rep.samples) == 200 and rep.contradictions == 0
        assert all(s.reason for s in rep.samples if s.status == "Unknown")
        parts.append(f"{f.to_text()}: {rep.agreements} agree, {rep.unknown} unknown")
    record("; ".join(parts))


SUITES = [
    props.test_union_rule,
    props.test_plus_minus_symmetry,
    props.test_cone_scaling,
    props.test_real_variety_inclusion,
    props.test_sturm_matches_numeric_roots,
    props.test_parser_round_trip,
]


def test_criterion_11_invariant_suites(record):
    assert all(s._hypothesis_internal_use_settings.max_examples >= 200 for s in SUITES)
    t = time.perf_counter()
    for suite in SUITES:
        suite()
    dt = time.perf_counter() - t
    assert dt < 120
    record(f"6 suites x {props.CASES} cases in {dt:.0f} s")

