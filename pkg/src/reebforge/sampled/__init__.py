"""Heuristic (floating point) Reeb graphs in any dimension, and doubling."""

from .core import (GridSpec, SampledReebGraph, check_double_iso, critical_points_numeric,
                   domain_box, double_grid, double_polynomial,
                   numeric_critical_values,
                   resolution_stable_reeb, sampled_double_reeb, sampled_reeb)
from .numeric import NumPoly

__all__ = [
    "GridSpec", "NumPoly", "SampledReebGraph", "check_double_iso", "critical_points_numeric",
    "domain_box",
    "double_grid", "double_polynomial", "numeric_critical_values", "resolution_stable_reeb",
    "sampled_double_reeb", "sampled_reeb",
]
