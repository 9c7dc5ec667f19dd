"""Algebraic domains with a prescribed Reeb graph."""

from .construct import realize_2d, verify_realization
from .embed import EmbeddedGraph, SweepScript, routes_cross, upward_embed
from .fit import fit_polynomial
from .layout import LayoutParams, NotDecomposable
from .solids import TubeSpec, attach_tube_3d, nested_spheres
from .thicken import RealizationConfig, ThickenedField, thicken_implicit

__all__ = [
    "EmbeddedGraph", "LayoutParams", "NotDecomposable", "RealizationConfig", "SweepScript",
    "ThickenedField", "TubeSpec", "attach_tube_3d", "fit_polynomial", "nested_spheres",
    "realize_2d", "routes_cross", "thicken_implicit", "upward_embed", "verify_realization",
]
