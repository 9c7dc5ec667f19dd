"""Exact Poincaré-Reeb graphs of planar polynomial domains, good orientations
of multigraphs, and algebraic realization of graphs as domains."""

__version__ = "0.1.0"
