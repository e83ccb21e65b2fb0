"""Hyperbolic polynomials, hyperbolicity cones and imaginary projections."""

from .algebra import CQ, MPoly, UPoly
from .arrangement import LinearFormSet, arrangement_membership, chambers, general_position, zaslavsky_central
from .hyperbolicity import (
    ConeCountReport,
    HyperbolicityConfig,
    HyperbolicityVerdict,
    Status,
    count_cones,
    is_hyperbolic,
    upper_bound,
)
from .improj import HermitianPencil, Membership, MembershipConfig, Verdict, membership
from .polytext import parse_poly, serialize

__all__ = [
    "CQ",
    "ConeCountReport",
    "HermitianPencil",
    "HyperbolicityConfig",
    "HyperbolicityVerdict",
    "LinearFormSet",
    "MPoly",
    "Membership",
    "MembershipConfig",
    "Status",
    "UPoly",
    "Verdict",
    "arrangement_membership",
    "chambers",
    "count_cones",
    "general_position",
    "is_hyperbolic",
    "membership",
    "parse_poly",
    "serialize",
    "upper_bound",
    "zaslavsky_central",
]
__version__ = "0.1.0"
