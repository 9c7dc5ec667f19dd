"""
The Reeb graph of an annulus
============================

The annulus {(x^2+y^2-1)(4-x^2-y^2) >= 0} seen through its x coordinate.
"""

from pathlib import Path

from reebforge.poly import parse_poly
from reebforge.reeb2d import DomainSpec2, critical_points, euler_characteristic, poincare_reeb_graph
from reebforge.render import render_domain

q = parse_poly("(x^2+y^2-1)*(4-x^2-y^2)", 2)
d = DomainSpec2(q)

# Four critical points of x on the boundary, each in a certified box.
for c in critical_points(d):
    print(c.event_class.name, c.box.x_interval)

###############################################################################
# Vertices carry exact rational x values; the intervals are the certificates.
r = poincare_reeb_graph(d)
print(r.to_json({"x_intervals": {v: [str(lo), str(hi)] for v, (lo, hi) in r.x_intervals.items()}}))

# one loop, so the Euler characteristic is zero
print("chi =", euler_characteristic(r))

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "annulus.svg").write_text(render_domain(q, r))
