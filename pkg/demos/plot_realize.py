"""
From a graph to a polynomial
============================

A lens (two leaves joined through a double edge) is drawn upward, thickened
into a smooth field, and fitted by a polynomial whose domain has the lens as
its Reeb graph.
"""

from pathlib import Path

from reebforge.graph import Multigraph, find_good_orientation
from reebforge.poly import format_poly
from reebforge.realize import realize_2d, upward_embed
from reebforge.render import render_domain, render_embedding

g = Multigraph("abcd", [("a", "b"), ("b", "c"), ("b", "c"), ("c", "d")])
w = find_good_orientation(g)
print(w.values)

out = Path("demo_output")
out.mkdir(exist_ok=True)
(out / "lens_embedding.svg").write_text(render_embedding(upward_embed(g, w)))

###############################################################################
# realize_2d only returns once the exact sweep of q gives back the input.
report = {}
q, r = realize_2d(g, w, report=report)
print(report["status"], "after", report["retries"], "retries, degree", report["degree"])
print(len(format_poly(q)), "characters of polynomial")
(out / "lens_domain.svg").write_text(render_domain(q, r))

###############################################################################
# The theta graph has no good orientation, so there is nothing to realize.
theta = Multigraph("ab", [("a", "b")] * 3)
print(find_good_orientation(theta))
