"""Exact Poincaré-Reeb graphs of planar domains."""

from .domain import (CriticalPoint2, DomainSpec2, EventClass, ExtremumType, check_compact,
                     check_nonsingular, check_stable, classify_critical_point, critical_points,
                     euler_characteristic, fiber_components, poincare_reeb_graph)

__all__ = [
    "CriticalPoint2", "DomainSpec2", "EventClass", "ExtremumType", "check_compact",
    "check_nonsingular", "check_stable", "classify_critical_point", "critical_points",
    "euler_characteristic", "fiber_components", "poincare_reeb_graph",
]
