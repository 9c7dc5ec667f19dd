"""
Doubling a planar domain
========================

z^2 = q(x, y) glues two copies of {q >= 0} along the boundary.  The sampled
Reeb graph of the solid it bounds matches the exact planar graph.
"""

from reebforge.graph import ordered_isomorphic
from reebforge.poly import format_poly, parse_poly
from reebforge.reeb2d import DomainSpec2, poincare_reeb_graph
from reebforge.sampled import GridSpec, domain_box, double_polynomial, sampled_double_reeb

for text in ["1 - x^2 - y^2", "(x^2+y^2-1)*(4-x^2-y^2)", "-((x-3)^2+y^2-1)*((x+3)^2+y^2-1)"]:
    q = parse_poly(text, 2)
    exact = poincare_reeb_graph(DomainSpec2(q))
    s = sampled_double_reeb(q, GridSpec(domain_box(q), 128))
    print(format_poly(double_polynomial(q)))
    print("  exact  ", exact.degree_sequence())
    print("  sampled", s.degree_sequence(), [float(x) for x, _ in s.vertices])
    print("  isomorphic:", ordered_isomorphic(exact, s.to_ordered()))
