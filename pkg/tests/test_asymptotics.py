import math
from fractions import Fraction

import pytest

from hypercone.algebra import CQ, MPoly
from hypercone.improj import asymptotics as A
from hypercone.improj import raster as R
from hypercone.improj.membership import membership

z1, z2 = MPoly.gens(2)
I = CQ(0, 1)
CUBIC = z1**3 - 2 * z1**2 * z2 + z1 * z2**2 + z1 + z2 + 1
S = 1 / math.sqrt(2)


def _as_set(dirs):
    return {(round(a, 9) + 0.0, round(b, 9) + 0.0) for a, b in dirs}


def test_limit_directions_hyperbola():
    ld = A.limit_directions(z1**2 - z2**2 - 1)
    assert ld.kind is A.DirectionKind.FINITE_SET
    expected = {(S, S), (-S, -S), (S, -S), (-S, S)}
    assert _as_set(ld.dirs) == _as_set(expected)


def test_limit_directions_full_circle():
    assert A.limit_directions(z1**2 + z2**2 + 1).kind is A.DirectionKind.FULL_CIRCLE


def test_limit_directions_cross():
    ld = A.limit_directions(z1 * z2)
    assert _as_set(ld.dirs) == _as_set({(1, 0), (-1, 0), (0, 1), (0, -1)})
    assert None in ld.slopes


def test_limit_directions_cubic():
    ld = A.limit_directions(CUBIC)
    assert _as_set(ld.dirs) == _as_set({(S, S), (-S, -S), (0, 1), (0, -1)})
    lo, hi = ld.slopes[0]
    assert lo <= 1 <= hi


def test_limit_directions_pairs_and_bound():
    for f in [CUBIC, z1 * z2 * (z1 - 3 * z2) + z2, (z1 - z2) ** 3 + 1]:
        ld = A.limit_directions(f)
        dirs = _as_set(ld.dirs)
        assert all((-a + 0.0, -b + 0.0) in dirs for a, b in dirs)
        assert len(ld.dirs) <= 2 * f.degree()


def test_limit_directions_zero_raises():
    with pytest.raises(ValueError):
        A.limit_directions(MPoly.zero(2))


def test_slice_matches_membership_for_forms():
    f = z1 * z2 * (z1 - 2 * z2)
    for y in [(1, 1), (0, 3), (2, 1), (Fraction(1, 3), -5)]:
        assert A.homogenized_slice_contains(f, y) == membership(f, y).inside


def test_homogenization_examples():
    for f in [z1 * z2, z1**2 + z2**2 + 25, z1**2 - z2**2 - 1]:
        rep = A.verify_homogenization(f, samples=40, seed=1)
        assert rep.contradictions == 0
        assert rep.agreements + rep.unknown == 40
        assert all(s.status != "Unknown" or s.reason for s in rep.samples)
    assert A.verify_homogenization(z1**2 + z2**2 + 25, samples=40).agreements == 40


def test_homogenization_complex_shift_is_unknown_not_contradiction():
    # I(z1 - i) is the line y1 = 1; the slice at infinity is the whole plane
    rep = A.verify_homogenization(z1 - I + 0 * z2, samples=40)
    assert rep.contradictions == 0 and rep.unknown > 0
    assert all(s.reason for s in rep.samples if s.status == "Unknown")


def test_recession_identity_for_forms():
    rep = A.recession_correspondence(z1 * z2, resolution=64)
    assert rep.matches == tuple((k, k) for k in range(4))
    assert rep.thin == () and rep.bijective


def test_recession_cubic_coarse():
    rep = A.recession_correspondence(CUBIC, resolution=128)
    assert (rep.f_components, len(rep.matches), len(rep.thin)) == (6, 4, 2)
    assert rep.bijective


def test_far_field_angles_hyperbola():
    grid = R.raster(z1**2 - z2**2 - 1, (-5, 5, -5, 5), 128)
    angles, pixel = A.far_field_angles(grid)
    want = A.limit_directions(z1**2 - z2**2 - 1).angles()
    assert len(angles) == len(want)
    for a in angles:
        assert min(A.angular_distance(a, b) for b in want) <= pixel
