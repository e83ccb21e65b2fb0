"""Imaginary projections: membership, rasters, components and asymptotics."""

from .asymptotics import limit_directions, recession_correspondence, verify_homogenization
from .membership import Membership, MembershipConfig, Method, Verdict, membership, point_decider
from .pencil import HermitianPencil
from .raster import ComponentReport, RasterGrid

__all__ = [
    "ComponentReport",
    "HermitianPencil",
    "Membership",
    "MembershipConfig",
    "Method",
    "RasterGrid",
    "Verdict",
    "limit_directions",
    "membership",
    "point_decider",
    "recession_correspondence",
    "verify_homogenization",
]
