import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercone.arrangement import (
    LinearFormSet,
    UnionSide,
    arrangement_membership,
    chambers,
    chambers_csv,
    general_position,
    zaslavsky_central,
)
from hypercone.linalg import det

COORD2 = LinearFormSet(2, [[1, 0], [0, 1]])


def test_linear_form_set_validation():
    with pytest.raises(ValueError):
        LinearFormSet(2, [[0, 0]])
    with pytest.raises(ValueError):
        LinearFormSet(2, [[1, 0, 0]])


def test_general_position_examples():
    assert general_position(LinearFormSet(2, [[1, 0], [0, 1], [1, 1]]))
    assert not general_position(LinearFormSet(2, [[1, 0], [2, 0]]))
    fs = LinearFormSet(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert general_position(fs)


def test_general_position_matches_minor_oracle():
    from itertools import combinations

    fs = LinearFormSet(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert all(det([list(fs.forms[i]) for i in c]) != 0 for c in combinations(range(4), 3))


def test_chambers_coordinate_cross():
    chs = chambers(COORD2)
    assert sorted(c.sign_text() for c in chs) == ["++", "+-", "-+", "--"]


def test_chambers_three_lines_brute_force():
    fs = LinearFormSet(2, [[1, 0], [0, 1], [1, 1]])
    rng = random.Random(0)
    seen = set()
    for _ in range(10_000):
        y = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        seen.add(tuple(1 if sum(a * b for a, b in zip(f, y)) > 0 else -1 for f in fs.forms))
    assert len(chambers(fs)) == len(seen) == 6


def test_chambers_one_dimension():
    assert len(chambers(LinearFormSet(1, [[1]]))) == 2


def test_zaslavsky_examples():
    assert zaslavsky_central(2, 3) == 6
    assert zaslavsky_central(3, 3) == 8
    assert zaslavsky_central(2, 5) == 10


def test_arrangement_membership_examples():
    assert arrangement_membership(COORD2, (0, 3)) is UnionSide.INSIDE
    assert arrangement_membership(COORD2, (1, 1)) is UnionSide.OUTSIDE
    fs = LinearFormSet(3, [[1, 2, 3], [-1, 0, 5]])
    assert arrangement_membership(fs, (0, 0, 0)) is UnionSide.INSIDE


def test_chambers_csv_layout():
    text = chambers_csv(chambers(COORD2))
    lines = text.strip().splitlines()
    assert lines[0] == "s1,s2,w1,w2"
    assert len(lines) == 5


def test_witnesses_have_unit_max_norm():
    fs = LinearFormSet(3, [[1, 2, 0], [0, 1, -1], [3, 0, 1], [1, 1, 1]])
    for c in chambers(fs):
        assert max(abs(x) for x in c.witness) == 1


# -- properties -------------------------------------------------------------------------


@st.composite
def form_sets(draw, max_n=3, max_d=5):
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    forms = []
    for _ in range(d):
        a = [draw(st.integers(-2, 2)) for _ in range(n)]
        if not any(a):
            a[0] = 1
        forms.append(a)
    return LinearFormSet(n, forms)


@settings(max_examples=200)
@given(form_sets())
def test_chamber_count_bounded_by_zaslavsky(fs):
    k = len(chambers(fs))
    z = zaslavsky_central(fs.n, fs.d)
    assert k <= z
    assert (k == z) == general_position(fs)


@settings(max_examples=200)
@given(form_sets())
def test_chambers_pair_up_and_witnesses_avoid_union(fs):
    chs = chambers(fs)
    signs = {c.signs for c in chs}
    for c in chs:
        neg = c.negated()
        assert neg.signs in signs
        assert all((v > 0) == (s > 0) for v, s in zip(fs.values(neg.witness), neg.signs))
        assert arrangement_membership(fs, c.witness) is UnionSide.OUTSIDE


@settings(max_examples=200)
@given(form_sets(), st.data())
def test_duplicates_do_not_change_count(fs, data):
    k = data.draw(st.integers(0, fs.d - 1))
    scale = data.draw(st.sampled_from([Fraction(-2), Fraction(1, 3), Fraction(5)]))
    dup = LinearFormSet(fs.n, list(fs.forms) + [[scale * x for x in fs.forms[k]]])
    assert len(chambers(dup)) == len(chambers(fs)) == len(chambers(fs.deduplicate()))
