"""Builders for the polynomial families studied here, plus a name-keyed catalog.

Every builder returns a :class:`CatalogEntry` whose ``expected`` record holds
the known counts or sets, and ``sources`` holds a short statement of where
each expected value comes from.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Sequence

from .algebra import MPoly, as_cq
from .arrangement import LinearFormSet, general_position
from .improj.pencil import MAX_EXPAND, HermitianPencil

__all__ = [
    "CATALOG",
    "CatalogEntry",
    "build",
    "catalog_listing",
    "coordinate_product",
    "cubic_six_components",
    "diag_det",
    "hermitian_det",
    "lorentz",
    "p_K2",
    "p_Kn",
    "pauli_pencil",
    "quartic_g",
    "random_independent_linear",
    "rotate12",
    "rotate12_rational",
    "rational_rotation",
]


@dataclass(frozen=True)
class CatalogEntry:
    """A named instance: the polynomial, optional structure, and expected values.

    ``factors`` lists the factors whose product is ``poly`` (membership uses
    the union rule on them); ``pencil`` and ``forms`` record determinantal
    or linear-product structure when the builder knows it.
    """

    name: str
    parameters: dict[str, Any]
    poly: MPoly
    factors: tuple[MPoly, ...] = ()
    pencil: HermitianPencil | None = None
    forms: LinearFormSet | None = None
    expected: dict[str, Any] = field(default_factory=dict)
    sources: dict[str, str] = field(default_factory=dict)

    @property
    def target(self):
        """The most structured membership target available."""
        if self.forms is not None:
            return self.forms
        if self.pencil is not None:
            return self.pencil
        if len(self.factors) > 1:
            return tuple(self.factors)
        return self.poly


def _product(factors: Sequence[MPoly]) -> MPoly:
    p = MPoly.const(1, factors[0].nvars)
    for f in factors:
        p = p * f
    return p


# ---------------------------------------------------------------------------
# classical families
# ---------------------------------------------------------------------------


def coordinate_product(n: int) -> CatalogEntry:
    """``z1 * ... * zn``; its imaginary projection is the union of the coordinate hyperplanes."""
    if n < 1:
        raise ValueError("n must be at least 1")
    zs = MPoly.gens(n)
    forms = LinearFormSet(n, [[int(i == j) for j in range(n)] for i in range(n)])
    return CatalogEntry(
        "coordinate_product",
        {"n": n},
        _product(zs),
        factors=tuple(zs),
        forms=forms,
        expected={"cones": 2**n},
        sources={"cones": "orthants: the complement of the coordinate hyperplanes"},
    )


def lorentz(n: int) -> CatalogEntry:
    """``z1^2 - z2^2 - ... - zn^2``; the complement of its imaginary projection is the open cone pair."""
    if n < 2:
        raise ValueError("n must be at least 2")
    zs = MPoly.gens(n)
    f = zs[0] ** 2
    for z in zs[1:]:
        f = f - z**2
    cones = 4 if n == 2 else 2
    return CatalogEntry(
        "lorentz",
        {"n": n},
        f,
        factors=(f,),
        expected={"cones": cones},
        sources={
            "cones": "two binary linear factors for n = 2; the second-order cone and its negative for n >= 3"
        },
    )


def diag_det(diagonals: Sequence[Sequence]) -> CatalogEntry:
    """``det(z1 A1 + ... + zn An)`` with diagonal ``Aj``; row ``l`` holds the ``l``-th diagonal entries.

    The determinant is the product of the forms ``sum_j a_l^(j) z_j``, and the
    imaginary projection is the union of their hyperplanes.
    """
    rows = [[Fraction(x) for x in row] for row in diagonals]
    if not rows or not rows[0]:
        raise ValueError("need at least one row and one column")
    n = len(rows[0])
    for row in rows:
        if len(row) != n:
            raise ValueError("all rows need the same length")
        if not any(row):
            raise ValueError("all-zero row: the determinant vanishes identically")
    forms = LinearFormSet(n, rows)
    d = len(rows)
    mats = [[[rows[i][j] if i == k else 0 for k in range(d)] for i in range(d)] for j in range(n)]
    factors = tuple(MPoly.linear(r) for r in rows)
    return CatalogEntry(
        "diag_det",
        {"diagonals": [[str(x) for x in r] for r in rows]},
        _product(factors),
        factors=factors,
        pencil=HermitianPencil(mats),
        forms=forms,
        expected={"imaginary_projection": "union of the hyperplanes of the rows"},
        sources={"imaginary_projection": "diagonal determinants split into real linear forms"},
    )


def hermitian_det(mats: Sequence) -> CatalogEntry:
    """Determinant of a Hermitian pencil; expanded when the matrices are at most 6 x 6."""
    pencil = HermitianPencil(mats)
    poly = pencil.expand() if pencil.d <= MAX_EXPAND else None
    if poly is None:
        raise ValueError(f"expansion is limited to d <= {MAX_EXPAND}; use the pencil directly")
    return CatalogEntry(
        "hermitian_det",
        {"mats": [[[as_cq(x).to_text() for x in row] for row in m] for m in pencil.mats]},
        poly,
        factors=(poly,),
        pencil=pencil,
        expected={"min_cones": 2},
        sources={
            "min_cones": "the definite cone {A(y) > 0} and its negative; reducible determinants can have more"
        },
    )


def pauli_pencil() -> CatalogEntry:
    """The pencil ``z1 I + z2 sigma_z + z3 sigma_x`` with determinant ``z1^2 - z2^2 - z3^2``."""
    e = hermitian_det([[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [1, 0]]])
    return CatalogEntry("pauli_pencil", {}, e.poly, e.factors, e.pencil, None, {"cones": 2}, {"cones": "Lorentz cone pair"})


# ---------------------------------------------------------------------------
# non-homogeneous examples
# ---------------------------------------------------------------------------


def cubic_six_components() -> CatalogEntry:
    """``z1^3 - 2 z1^2 z2 + z1 z2^2 + z1 + z2 + 1`` with initial form ``z1 (z1 - z2)^2``."""
    z1, z2 = MPoly.gens(2)
    f = z1**3 - 2 * z1**2 * z2 + z1 * z2**2 + z1 + z2 + 1
    return CatalogEntry(
        "cubic_six_components",
        {},
        f,
        factors=(f,),
        expected={"components": 6, "matched_unbounded": 4, "box": [-4, 4, -4, 4], "resolution": 512},
        sources={
            "components": "six complement components, two of them strips without full-dimensional recession",
            "matched_unbounded": "the four cones of the initial form",
        },
    )


def quartic_g() -> CatalogEntry:
    """``(-z1^2 + z2^2 - 1)(z1^2 - z2^2 - 1)``: complement bounded by four hyperbolas."""
    z1, z2 = MPoly.gens(2)
    factors = (-(z1**2) + z2**2 - 1, z1**2 - z2**2 - 1)
    return CatalogEntry(
        "quartic_g",
        {},
        _product(factors),
        factors=factors,
        expected={"strictly_convex_regions": 4},
        sources={"strictly_convex_regions": "the four regions beyond the hyperbola branches"},
    )


# ---------------------------------------------------------------------------
# rotations
# ---------------------------------------------------------------------------


def _rotate_with(f: MPoly, c, s) -> MPoly:
    """Substitute ``(z1, z2) <- (c z1 - s z2, s z1 + c z2)``."""
    if f.nvars < 2:
        raise ValueError("rotation acts on the first two variables")
    zs = MPoly.gens(f.nvars)
    subs = [zs[0] * c - zs[1] * s, zs[0] * s + zs[1] * c] + zs[2:]
    return f.compose(subs)


def _exact_quarter(j: int, m: int) -> tuple[int, int] | None:
    """``(cos, sin)`` when ``2 pi j / m`` is a multiple of a quarter turn."""
    q = Fraction(4 * j, m)
    if q.denominator != 1:
        return None
    return [(1, 0), (0, 1), (-1, 0), (0, -1)][int(q) % 4]


def rotate12(f: MPoly, j: int, m: int) -> MPoly:
    """Rotation substitution by ``2 pi j / m`` with float cosine and sine.

    The float values enter as their exact binary rationals, so the result is
    an exact polynomial close to the true rotation.
    """
    if m < 1:
        raise ValueError("m must be positive")
    exact = _exact_quarter(j, m)
    if exact is not None:
        return _rotate_with(f, *exact)
    theta = 2 * math.pi * j / m
    return _rotate_with(f, Fraction(math.cos(theta)), Fraction(math.sin(theta)))


def rational_rotation(theta: float, tol: float = 1e-3) -> tuple[Fraction, Fraction]:
    """A rational point ``(c, s)`` on the unit circle within angle ``tol`` of ``theta``.

    Uses ``c = (1 - t^2)/(1 + t^2)``, ``s = 2t/(1 + t^2)`` with ``t`` a
    rational approximation of ``tan(theta / 2)``; quarter turns are exact.
    """
    quarter = theta / (math.pi / 2)
    if abs(quarter - round(quarter)) < 1e-12:
        return tuple(Fraction(v) for v in [(1, 0), (0, 1), (-1, 0), (0, -1)][round(quarter) % 4])
    half = math.tan(theta / 2)
    den = 1
    while True:
        t = Fraction(half).limit_denominator(den)
        c = (1 - t * t) / (1 + t * t)
        s = 2 * t / (1 + t * t)
        err = abs(math.remainder(math.atan2(float(s), float(c)) - theta, 2 * math.pi))
        if err <= tol:
            return c, s
        den *= 2


def rotate12_rational(f: MPoly, j: int, m: int, tol: float = 1e-3) -> MPoly:
    """Rotation substitution by a Pythagorean angle within ``tol`` of ``2 pi j / m``."""
    if m < 1:
        raise ValueError("m must be positive")
    exact = _exact_quarter(j, m)
    if exact is not None:
        return _rotate_with(f, *exact)
    return _rotate_with(f, *rational_rotation(2 * math.pi * j / m, tol))


# ---------------------------------------------------------------------------
# many strictly convex components
# ---------------------------------------------------------------------------


def _rotator(rotation: str) -> Callable[[MPoly, int, int], MPoly]:
    if rotation == "rational":
        return rotate12_rational
    if rotation == "float":
        return rotate12
    raise ValueError("rotation must be 'rational' or 'float'")


def p_K2(K: int, r=5, rotation: str = "rational") -> CatalogEntry:
    """Disk factor ``z1^2 + z2^2 + r^2`` times ``m = ceil(K/4)`` rotated copies of ``g``."""
    if K < 1:
        raise ValueError("K must be at least 1")
    r = Fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    m = -(-K // 4)
    rot = _rotator(rotation)
    z1, z2 = MPoly.gens(2)
    factors = [z1**2 + z2**2 + r * r]
    for g in quartic_g().factors:
        for j in range(m):
            factors.append(rot(g, j, m))
    return CatalogEntry(
        "p_K2",
        {"K": K, "r": str(r), "m": m, "rotation": rotation},
        _product(factors),
        factors=tuple(factors),
        expected={"bounded": 8 * m, "strictly_convex_at_least": 4 * m, "box": [-6, 6, -6, 6], "resolution": 512},
        sources={
            "bounded": "four hyperbola regions and four asymptote pieces per rotated copy inside the disk",
            "strictly_convex_at_least": "hyperbola regions clipped by the disk are strictly convex",
        },
    )


def p_Kn(K: int, n: int, r=5, rotation: str = "rational") -> CatalogEntry:
    """Ball factor ``sum zj^2 + 1`` times ``m = ceil(K/2)`` rotated copies of ``r^2 z1^2 - sum_{j>=2} zj^2 + 1``."""
    if K < 1:
        raise ValueError("K must be at least 1")
    if n < 3:
        raise ValueError("use p_K2 for n = 2")
    r = Fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    m = -(-K // 2)
    rot = _rotator(rotation)
    zs = MPoly.gens(n)
    ball = MPoly.const(1, n)
    for z in zs:
        ball = ball + z**2
    g = zs[0] ** 2 * (r * r) + 1
    for z in zs[1:]:
        g = g - z**2
    factors = [ball] + [rot(g, j, m) for j in range(m)]
    return CatalogEntry(
        "p_Kn",
        {"K": K, "n": n, "r": str(r), "m": m, "rotation": rotation},
        _product(factors),
        factors=tuple(factors),
        expected={"strictly_convex_bounded_at_least": 2 * m},
        sources={"strictly_convex_bounded_at_least": "two hyperboloid caps per rotated copy inside the unit ball"},
    )


# ---------------------------------------------------------------------------
# random arrangements
# ---------------------------------------------------------------------------


def random_independent_linear(n: int, d: int, seed: int = 0) -> LinearFormSet:
    """``d`` integer forms in ``n`` variables in general position, deterministic per seed."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    rng = random.Random(seed)
    while True:
        forms = []
        for _ in range(d):
            a = [rng.randint(-9, 9) for _ in range(n)]
            while not any(a):
                a = [rng.randint(-9, 9) for _ in range(n)]
            forms.append(a)
        fs = LinearFormSet(n, forms)
        if general_position(fs):
            return fs


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def _linear_entry(n: int, d: int, seed: int = 0) -> CatalogEntry:
    from .hyperbolicity import upper_bound

    fs = random_independent_linear(n, d, seed)
    factors = tuple(MPoly.linear(a) for a in fs.forms)
    return CatalogEntry(
        "random_independent_linear",
        {"n": n, "d": d, "seed": seed},
        _product(factors),
        factors=factors,
        forms=fs,
        expected={"cones": upper_bound(n, d)},
        sources={"cones": "independent linear forms attain the sharp bound"},
    )


# name -> (builder, parameter schema); schema values are parameter types
CATALOG: dict[str, tuple[Callable[..., CatalogEntry], dict[str, str]]] = {
    "coordinate_product": (coordinate_product, {"n": "int"}),
    "lorentz": (lorentz, {"n": "int"}),
    "diag_det": (diag_det, {"diagonals": "matrix"}),
    "hermitian_det": (hermitian_det, {"mats": "matrices"}),
    "pauli_pencil": (pauli_pencil, {}),
    "cubic_six_components": (cubic_six_components, {}),
    "quartic_g": (quartic_g, {}),
    "p_K2": (p_K2, {"K": "int", "r": "rational", "rotation": "str"}),
    "p_Kn": (p_Kn, {"K": "int", "n": "int", "r": "rational", "rotation": "str"}),
    "random_independent_linear": (_linear_entry, {"n": "int", "d": "int", "seed": "int"}),
}


def build(name: str, **params) -> CatalogEntry:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}")
    builder, schema = CATALOG[name]
    unknown = set(params) - set(schema)
    if unknown:
        raise ValueError(f"unknown parameters for {name}: {', '.join(sorted(unknown))}")
    return builder(**params)


_DEFAULTS = {
    "coordinate_product": {"n": 2},
    "lorentz": {"n": 3},
    "diag_det": {"diagonals": [[1, 0], [0, 1]]},
    "hermitian_det": {"mats": [[[1, 0], [0, 1]], [[1, 0], [0, -1]]]},
    "p_K2": {"K": 4},
    "p_Kn": {"K": 2, "n": 3},
    "random_independent_linear": {"n": 2, "d": 3},
}


def catalog_listing() -> list[dict[str, Any]]:
    """Name, parameter schema and the expected values of a default instance."""
    out = []
    for name in sorted(CATALOG):
        _, schema = CATALOG[name]
        entry = build(name, **_DEFAULTS.get(name, {}))
        out.append(
            {
                "name": name,
                "parameters": schema,
                "defaults": _DEFAULTS.get(name, {}),
                "expected": entry.expected,
                "sources": entry.sources,
            }
        )
    return out
