"""
Degree two vertices in three dimensions
=======================================

A spherical shell has a path as Reeb graph, with two vertices of degree two
where the inner sphere appears and disappears.  A ball pierced by a thin tube
gives the same pattern.
"""

from fractions import Fraction

from reebforge.poly import parse_poly
from reebforge.realize import TubeSpec, attach_tube_3d, nested_spheres
from reebforge.sampled import GridSpec, numeric_critical_values, resolution_stable_reeb

shell = nested_spheres(3, 1, 2)
grid = GridSpec.cube(3, Fraction(5, 2), 128)
print(numeric_critical_values(shell, 3, grid))
print(resolution_stable_reeb(shell, 3, grid).degree_sequence())

###############################################################################
# The tube runs along the x axis from -1 to 1 inside a ball of radius 3.
ball = parse_poly("9 - x^2 - y^2 - z^2", 3)
h = attach_tube_3d(ball, TubeSpec(((-1, 0, 0), (1, 0, 0)), Fraction(1, 4)))
s = resolution_stable_reeb(h, 3, GridSpec.cube(3, Fraction(15, 4), 128))
print(s.degree_sequence(), [float(x) for x, _ in s.vertices])
