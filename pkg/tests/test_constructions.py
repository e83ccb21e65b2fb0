import json
import math
import random
from fractions import Fraction

import pytest

from hypercone import constructions as C
from hypercone.algebra import CQ, MPoly, bareiss_det
from hypercone.arrangement import UnionSide, arrangement_membership, chambers, general_position
from hypercone.hyperbolicity import count_cones
from hypercone.improj.membership import Verdict, membership
from hypercone.jsonio import to_jsonable

z1, z2 = MPoly.gens(2)
I = CQ(0, 1)


@pytest.mark.parametrize("n,cones", [(1, 2), (2, 4), (3, 8)])
def test_coordinate_product(n, cones):
    e = C.coordinate_product(n)
    assert e.expected["cones"] == cones
    assert count_cones(e.forms).count == cones
    if n > 1:
        assert count_cones(e.poly).count == cones


def test_lorentz():
    e = C.lorentz(3)
    assert membership(e.poly, (2, 1, 1)).value is Verdict.OUTSIDE
    assert membership(e.poly, (0, 1, 0)).value is Verdict.INSIDE
    assert count_cones(e.poly).count == e.expected["cones"] == 2
    two = C.lorentz(2)
    assert count_cones(two.poly).count == two.expected["cones"] == 4
    with pytest.raises(ValueError):
        C.lorentz(1)


def test_diag_det_examples():
    assert C.diag_det([[1, 0], [0, 1]]).poly == C.coordinate_product(2).poly
    e = C.diag_det([[1, 1], [1, -1]])
    assert e.poly == z1**2 - z2**2
    assert e.pencil.expand() == e.poly
    assert membership(e.poly, (3, 3)).inside and membership(e.poly, (3, -3)).inside
    assert not membership(e.poly, (3, 1)).inside
    single = C.diag_det([[1, 0]])
    assert single.poly == z1
    with pytest.raises(ValueError):
        C.diag_det([[1, 0], [0, 0]])


def test_diag_det_membership_matches_arrangement():
    rng = random.Random(4)
    e = C.diag_det([[1, 2, -1], [0, 1, 3], [2, -1, 1]])
    for _ in range(200):
        y = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3))
        assert membership(e.forms, y).inside == (arrangement_membership(e.forms, y) is UnionSide.INSIDE)
        assert membership(e.pencil, y).inside == membership(e.forms, y).inside


def test_hermitian_det_examples():
    e = C.hermitian_det([[[1, 0], [0, 1]], [[1, 0], [0, -1]]])
    assert e.poly == (z1 + z2) * (z1 - z2)
    (x,) = MPoly.gens(1)
    one = C.hermitian_det([[[1, 0, 0], [0, 1, 0], [0, 0, 1]]])
    assert one.poly == x**3 and count_cones(one.poly).count == 2
    assert C.pauli_pencil().poly == C.lorentz(3).poly
    with pytest.raises(ValueError):
        C.hermitian_det([[[1, 1], [0, 1]]])


def test_hermitian_det_matches_determinant_at_complex_points():
    e = C.hermitian_det([[[2, CQ(1, 1)], [CQ(1, -1), 0]], [[0, I], [-I, 1]], [[1, 0], [0, -3]]])
    rng = random.Random(9)
    for _ in range(100):
        z = tuple(CQ(Fraction(rng.randint(-9, 9), 4), Fraction(rng.randint(-9, 9), 4)) for _ in range(3))
        assert e.poly.eval(z) == bareiss_det(e.pencil.at(z))


def test_quartic_g_value():
    e = C.quartic_g()
    assert e.poly.eval((CQ(0, 2), 0)) == CQ(-15)
    assert [f.eval((CQ(0, 2), 0)) for f in e.factors] == [CQ(3), CQ(-5)]


def test_p_K2():
    e = C.p_K2(4, 5)
    assert e.parameters["m"] == 1 and e.expected["bounded"] == 8
    assert e.expected["strictly_convex_at_least"] == 4
    assert C.p_K2(1, 5).poly == e.poly
    assert C.p_K2(5).parameters["m"] == 2 and len(C.p_K2(5).factors) == 5
    assert e.poly == (z1**2 + z2**2 + 25) * C.quartic_g().poly


def test_p_Kn():
    e = C.p_Kn(3, 3)
    assert e.parameters["m"] == 2 and len(e.factors) == 3
    with pytest.raises(ValueError):
        C.p_Kn(3, 2)


def test_random_independent_linear():
    assert general_position(C.random_independent_linear(2, 3, seed=1))
    assert len(chambers(C.random_independent_linear(3, 3, seed=1))) == 8
    assert len(chambers(C.random_independent_linear(2, 5, seed=1))) == 10
    assert C.random_independent_linear(3, 4, seed=7) == C.random_independent_linear(3, 4, seed=7)


def test_rotations():
    f = z1**3 + 2 * z1 * z2 - z2 + 1
    for m in (1, 3, 7):
        assert C.rotate12(f, 0, m) == f
        assert C.rotate12_rational(f, 0, m) == f
    quarter = f.compose([-z2, z1])
    assert C.rotate12_rational(f, 1, 4) == quarter == C.rotate12(f, 1, 4)
    assert C.rotate12(f, 1, 2) == f.compose([-z1, -z2])


def test_rational_rotation_accuracy():
    for theta in [0.3, 1.0, 2 * math.pi / 3, 4.0, -1.2]:
        c, s = C.rational_rotation(theta, 1e-3)
        assert c * c + s * s == 1
        assert abs(math.remainder(math.atan2(float(s), float(c)) - theta, 2 * math.pi)) <= 1e-3


def test_catalog_registry():
    listing = C.catalog_listing()
    assert {row["name"] for row in listing} == set(C.CATALOG)
    json.dumps(to_jsonable(listing))
    assert C.build("lorentz", n=4).poly.nvars == 4
    with pytest.raises(KeyError):
        C.build("nope")
    with pytest.raises(ValueError):
        C.build("lorentz", m=2)


def test_catalog_cone_counts_reproduce():
    for name, params in [("coordinate_product", {"n": 3}), ("lorentz", {"n": 3}), ("pauli_pencil", {}),
                         ("random_independent_linear", {"n": 3, "d": 5, "seed": 2})]:
        e = C.build(name, **params)
        assert count_cones(e.target).count == e.expected["cones"], name
