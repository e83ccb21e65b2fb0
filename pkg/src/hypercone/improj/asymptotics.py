"""Behaviour of imaginary projections at infinity in the plane.

* :func:`limit_directions` reads the limit directions off the roots of the
  initial form.
* :func:`verify_homogenization` compares the slice ``{y0 = 0}`` of the
  imaginary projection of the homogenization with the cone over ``I(f)``
  united with ``I(init f)``, deciding the slice by its own exact route.
* :func:`recession_correspondence` matches unbounded complement components
  of ``I(f)`` with those of ``I(init f)`` on a raster.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..algebra import MPoly, UPoly, resultant
from ..realroots import (
    all_roots_real,
    count_all_real_roots_int,
    gcd_int,
    isolate_real_roots,
    primitive,
    to_int_poly,
)
from .bivariate import _sample_points, poly_gcd
from .membership import DEFAULT_CONFIG, MembershipConfig, Verdict, point_decider
from .raster import _label, raster

__all__ = [
    "DirectionKind",
    "HomogenizationReport",
    "HomogenizationSample",
    "LimitDirections",
    "RecessionReport",
    "angular_distance",
    "far_field_angles",
    "homogenized_slice_contains",
    "limit_directions",
    "recession_correspondence",
    "verify_homogenization",
]


# ---------------------------------------------------------------------------
# limit directions
# ---------------------------------------------------------------------------


class DirectionKind(Enum):
    FINITE_SET = "FiniteSet"
    FULL_CIRCLE = "FullCircle"


@dataclass(frozen=True)
class LimitDirections:
    """Limit directions of ``I(f)``.

    For a finite set, ``slopes`` holds one entry per real projective root of
    the initial form: an isolating interval ``(lo, hi)`` for ``a`` in the
    direction ``(1, a)``, or ``None`` for the direction ``(0, 1)``.  ``dirs``
    lists both unit vectors of every slope as floats.
    """

    kind: DirectionKind
    slopes: tuple[tuple[Fraction, Fraction] | None, ...] = ()
    dirs: tuple[tuple[float, float], ...] = ()

    def angles(self) -> list[float]:
        """Directions as angles in ``[0, 2 pi)``."""
        return sorted(math.atan2(d[1], d[0]) % (2 * math.pi) for d in self.dirs)


def _unit(a: float) -> tuple[float, float]:
    s = math.sqrt(1 + a * a)
    return (1 / s, a / s)


def limit_directions(f: MPoly, precision: Fraction = Fraction(1, 2**40)) -> LimitDirections:
    """Limit directions from the roots ``a`` of ``init(f)(1, a)``, plus the root at infinity."""
    if f.nvars != 2:
        raise ValueError("limit directions are implemented for two variables")
    if not f:
        raise ValueError("the zero polynomial has no limit directions")
    h = f.initial_form()
    deg = h.degree()
    p = h.partial_eval({0: 1}).drop_vars([1]).as_univariate(0) if deg else UPoly([h.constant_term()])
    # the root at infinity has the multiplicity deg - deg p
    infinite = p.degree() < deg
    if p.degree() > 0:
        lead = p.coeffs[-1]
        monic = UPoly([c / lead for c in p.coeffs])
        if not all(c.is_real() for c in monic.coeffs) or not all_roots_real(monic):
            return LimitDirections(DirectionKind.FULL_CIRCLE)
        iso = isolate_real_roots(monic, precision)
        slopes: list[tuple[Fraction, Fraction] | None] = list(iso.intervals)
    else:
        slopes = []
    if infinite:
        slopes.append(None)
    dirs: list[tuple[float, float]] = []
    for s in slopes:
        if s is None:
            v = (0.0, 1.0)
        else:
            v = _unit(float((s[0] + s[1]) / 2))
        dirs.extend([v, (-v[0], -v[1])])
    return LimitDirections(DirectionKind.FINITE_SET, tuple(slopes), tuple(dirs))


# ---------------------------------------------------------------------------
# homogenization
# ---------------------------------------------------------------------------


def _fibre(F: MPoly, b: Fraction) -> UPoly:
    return F.partial_eval({1: b}).drop_vars([0]).as_univariate(0)


def _has_nonreal_root(p: UPoly) -> bool:
    if p.degree() < 1:
        return False
    lead = p.coeffs[-1]
    monic = UPoly([c / lead for c in p.coeffs])
    if not all(c.is_real() for c in monic.coeffs):
        return True
    return not all_roots_real(monic)


def _real_int(p: MPoly) -> list[int]:
    """A polynomial in the variable of index 1 only, normalized to real integer coefficients."""
    u = p.drop_vars([1]).as_univariate(0)
    c = next(c for c in reversed(u.coeffs) if c)
    u = UPoly([x / c for x in u.coeffs])
    if not all(x.is_real() for x in u.coeffs):
        raise ArithmeticError("expected a real polynomial up to a constant factor")
    return primitive(to_int_poly(u))


def homogenized_slice_contains(f: MPoly, y: Sequence) -> bool | None:
    """Whether ``(0, y)`` lies in ``I(f_h)``, decided without going through ``I(f)``.

    Writing the real point ``x0`` of the homogenizing coordinate as a scale,
    ``(0, y)`` is in ``I(f_h)`` iff ``init(f)`` has a zero with imaginary part
    ``y``, or ``f`` has a zero whose imaginary part is a nonzero real
    multiple of ``y``.  The second condition is read in the basis
    ``(y, y_perp)``: ``F(a, b) = f(a y + b y_perp)`` must vanish for some real
    ``b`` and non-real ``a``.  The set of such ``b`` is open apart from fibres
    where ``F(., b)`` vanishes identically, so one rational sample per
    interval between critical values decides it.  Returns ``None`` for
    complex ``f`` whose critical set is not finite.
    """
    y = [Fraction(v) for v in y]
    if f.nvars != 2 or len(y) != 2:
        raise ValueError("expected a polynomial and a point in two variables")
    if not any(y):
        raise ValueError("the origin is excluded")
    init = f.initial_form()
    from .membership import membership

    if init.degree() > 0 and membership(init, y).value is Verdict.INSIDE:
        return True
    a, b = MPoly.gens(2)
    F = f.compose([a * y[0] - b * y[1], a * y[1] + b * y[0]])
    if F.degree_in(0) == 0:
        return False
    coeffs = F.coeffs_in(0)
    # fibres with F(., b) = 0: common real roots of the coefficients
    if F.is_real():
        g: list[int] = []
        for c in coeffs:
            if c:
                ci = _real_int(c) if not c.is_constant() else [1]
                g = ci if not g else gcd_int(g, ci)
        if len(g) > 1 and count_all_real_roots_int(g) > 0:
            return True
        Fa = F.derivative(0)
        common = poly_gcd(F, Fa)
        Fsf = F.exact_div(common) if not common.is_constant() else F
        lead = Fsf.coeffs_in(0)[-1]
        disc = resultant(Fsf, Fsf.derivative(0), 0)
        crit = (lead * disc) if disc else lead
    else:
        Fc = F.conj()
        crit = resultant(F, Fc, 0) if F.degree_in(0) > 0 else MPoly.zero(2)
        if not crit:
            return None
        crit = crit * coeffs[-1] * coeffs[-1].conj()
        # zero fibres lie among the real roots of the leading coefficient
        lc = _real_int(coeffs[-1] * coeffs[-1].conj()) if not coeffs[-1].is_constant() else [1]
        for s in _roots_rational_neighbourhood(lc):
            if not _fibre(F, s):
                return True
        Fsf = F
    crit_int = _real_int(crit) if not crit.is_constant() else [1]
    return any(_has_nonreal_root(_fibre(Fsf, s)) for s in _sample_points(crit_int))


def _roots_rational_neighbourhood(p: list[int]) -> list[Fraction]:
    """Rational real roots of an integer polynomial (the only candidates for identically zero fibres)."""
    out = []
    if len(p) <= 1:
        return out
    iso = isolate_real_roots(UPoly(p), Fraction(1, 2**20))
    for lo, hi in iso.intervals:
        if lo == hi:
            out.append(lo)
    return out


@dataclass(frozen=True)
class HomogenizationSample:
    y: tuple[Fraction, Fraction]
    slice_inside: bool | None
    via_init: bool
    ray_witness: Fraction | None
    status: str
    reason: str = ""


@dataclass(frozen=True)
class HomogenizationReport:
    samples: tuple[HomogenizationSample, ...]
    agreements: int
    unknown: int
    contradictions: int


def _ray_grid(steps: int) -> list[Fraction]:
    """Scales ``k/4`` and ``4/k`` for ``k = 1..steps``, deduplicated and sorted."""
    vals = {Fraction(k, 4) for k in range(1, steps + 1)} | {Fraction(4, k) for k in range(1, steps + 1)}
    return sorted(vals)


def verify_homogenization(
    f: MPoly,
    samples: int = 200,
    seed: int = 0,
    ray_steps: int = 64,
    cfg: MembershipConfig = DEFAULT_CONFIG,
) -> HomogenizationReport:
    """Sample ``y`` and compare the two sides of the homogenization identity.

    The left side is :func:`homogenized_slice_contains`.  The right side is
    ``y in I(init f)`` (exact) or a ray witness ``lam * y in I(f)`` on the grid
    of :func:`_ray_grid`.  When the left side says Inside and no witness is
    found on the grid, the sample is Unknown: the grid cannot rule out
    scales it does not visit.
    """
    if f.nvars != 2:
        raise ValueError("verify_homogenization expects two variables")
    if not f:
        raise ValueError("the zero polynomial is excluded")
    rng = random.Random(seed)
    decide = point_decider(f, "exact", cfg)
    init = f.initial_form()
    decide_init = point_decider(init, "exact", cfg) if init.degree() > 0 else None
    grid = _ray_grid(ray_steps)
    out = []
    for _ in range(samples):
        while True:
            y = (Fraction(rng.randint(-64, 64), 16), Fraction(rng.randint(-64, 64), 16))
            if any(y):
                break
        left = homogenized_slice_contains(f, y)
        via_init = decide_init is not None and decide_init(y).value is Verdict.INSIDE
        witness = None
        if not via_init:
            for lam in grid:
                if decide((lam * y[0], lam * y[1])).value is Verdict.INSIDE:
                    witness = lam
                    break
        right = via_init or witness is not None
        if left is None:
            status, reason = "unknown", "slice route undecided for this complex polynomial"
        elif left == right:
            status, reason = "agree", ""
        elif left and not right:
            status, reason = "unknown", "no ray witness on the sampled scale grid"
        else:
            status, reason = "contradiction", "right side has a witness but the slice excludes y"
        out.append(HomogenizationSample(y, left, via_init, witness, status, reason))
    return HomogenizationReport(
        tuple(out),
        sum(s.status == "agree" for s in out),
        sum(s.status == "unknown" for s in out),
        sum(s.status == "contradiction" for s in out),
    )


# ---------------------------------------------------------------------------
# recession correspondence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecessionReport:
    """Far-field comparison of the complement components of ``I(f)`` and ``I(init f)``.

    ``matches`` pairs component ids of ``f`` with component ids of
    ``init f``; ``thin`` lists unbounded components of ``f`` whose angular
    extent shrinks with the radius (lower-dimensional recession);
    ``unmatched_init`` lists components of ``init f`` without a partner.
    """

    f_components: int
    f_unbounded: int
    init_components: int
    matches: tuple[tuple[int, int], ...]
    thin: tuple[int, ...]
    unmatched_init: tuple[int, ...]
    extents: dict = field(default_factory=dict, compare=False)

    @property
    def bijective(self) -> bool:
        return not self.unmatched_init and len({k for _, k in self.matches}) == len(self.matches)


WIDENING = 0.75


def _ring(n: int, frac: float) -> list[tuple[int, int]]:
    """Square ring of pixels at the given fraction of the half-width, centred in the grid."""
    lo = int(round(n / 2 - frac * n / 2))
    hi = n - 1 - lo
    top = [(lo, c) for c in range(lo, hi + 1)]
    bottom = [(hi, c) for c in range(lo, hi + 1)]
    sides = [(r, lo) for r in range(lo + 1, hi)] + [(r, hi) for r in range(lo + 1, hi)]
    return top + bottom + sides


def _extent(labels: np.ndarray, ring: list[tuple[int, int]], k: int) -> float:
    """Angular share (radians) of the ring occupied by component ``k``."""
    hits = sum(1 for r, c in ring if labels[r, c] == k)
    return hits * 2 * math.pi / len(ring)


def recession_correspondence(
    f: MPoly,
    box: Sequence = (-4, 4, -4, 4),
    resolution: int = 512,
    cfg: MembershipConfig = DEFAULT_CONFIG,
) -> RecessionReport:
    """Match unbounded complement components of ``I(f)`` to cones of ``init f``.

    An unbounded component counts as having a full-dimensional recession cone
    when its angular share of the outer pixel ring is positive and at least
    ``WIDENING`` times its share on the ring at half the radius.  A share
    decaying like ``R**-alpha`` gives the ratio ``2**-alpha``: ``1`` for a
    wedge, ``1/2`` for a strip of constant width, ``1/sqrt(2)`` for a
    parabolic region.  Each such component is matched to the component of
    ``I(init f)^c`` it overlaps most on the outer ring.
    """
    if f.nvars != 2:
        raise ValueError("recession correspondence expects two variables")
    init = f.initial_form()
    gf = raster(f, box, resolution, "exact", cfg)
    gi = raster(init, box, resolution, "exact", cfg)
    lf, li = _label(gf), _label(gi)
    n = resolution
    outer, inner = _ring(n, 1.0), _ring(n, 0.5)
    nf = int(lf.max()) + 1 if (lf >= 0).any() else 0
    ni = int(li.max()) + 1 if (li >= 0).any() else 0
    frame = np.zeros((n, n), dtype=bool)
    frame[0, :] = frame[-1, :] = frame[:, 0] = frame[:, -1] = True
    unbounded = [k for k in range(nf) if (lf[frame] == k).any()]
    matches, thin, extents = [], [], {}
    for k in unbounded:
        e_out, e_in = _extent(lf, outer, k), _extent(lf, inner, k)
        extents[k] = (e_out, e_in)
        if e_out <= 0 or e_out < WIDENING * e_in:
            thin.append(k)
            continue
        overlap = [sum(1 for r, c in outer if lf[r, c] == k and li[r, c] == j) for j in range(ni)]
        if not overlap or max(overlap) == 0:
            thin.append(k)
            continue
        matches.append((k, int(np.argmax(overlap))))
    matched_init = {j for _, j in matches}
    unmatched = tuple(j for j in range(ni) if j not in matched_init)
    return RecessionReport(nf, len(unbounded), ni, tuple(matches), tuple(thin), unmatched, extents)


def far_field_angles(grid) -> tuple[list[float], float]:
    """Angles of Inside pixels on the outer pixel ring, averaged per cluster.

    Returns the cluster angles in ``[0, 2 pi)`` and the angular size of one
    pixel at the ring corners (the coarsest angular resolution on the ring).
    Clusters are runs along the ring separated by more than two pixels.
    """
    from .raster import INSIDE

    n = grid.resolution
    ring = _ring_ordered(n)
    hits = [i for i, (r, c) in enumerate(ring) if grid.cells[r, c] == INSIDE]
    half_w = float(grid.box[1] - grid.box[0]) / 2
    cx = float(grid.box[0] + grid.box[1]) / 2
    cy = float(grid.box[2] + grid.box[3]) / 2
    pixel_angle = (2 * half_w / n) / (half_w * math.sqrt(2))
    if not hits:
        return [], pixel_angle
    # split the cyclic sequence of hits into runs
    runs: list[list[int]] = [[hits[0]]]
    for a, b in zip(hits, hits[1:]):
        if b - a > 2:
            runs.append([b])
        else:
            runs[-1].append(b)
    if len(runs) > 1 and hits[0] + len(ring) - hits[-1] <= 2:
        runs[0] = runs.pop() + runs[0]
    out = []
    for run in runs:
        vs = []
        for i in run:
            y = grid.center(*ring[i])
            vs.append(math.atan2(float(y[1]) - cy, float(y[0]) - cx))
        s = sum(math.sin(v) for v in vs)
        c = sum(math.cos(v) for v in vs)
        out.append(math.atan2(s, c) % (2 * math.pi))
    return sorted(out), pixel_angle


def _ring_ordered(n: int) -> list[tuple[int, int]]:
    """Outer pixel ring in cyclic order."""
    top = [(0, c) for c in range(n)]
    right = [(r, n - 1) for r in range(1, n)]
    bottom = [(n - 1, c) for c in range(n - 2, -1, -1)]
    left = [(r, 0) for r in range(n - 2, 0, -1)]
    return top + right + bottom + left


def angular_distance(a: float, b: float) -> float:
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)
