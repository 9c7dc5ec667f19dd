"""SVG pictures of planar domains, their Reeb graphs and graph embeddings.

Display only: the zero curve is traced by marching squares on a float grid.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np
from skimage import measure

from .sampled.core import domain_box
from .sampled.numeric import NumPoly

SIZE = 480


class _Canvas:
    """Maps a world box onto an SVG viewport with y pointing up."""

    def __init__(self, box, size=SIZE):
        (self.x0, self.x1), (self.y0, self.y1) = [(float(a), float(b)) for a, b in box]
        span = max(self.x1 - self.x0, self.y1 - self.y0)
        self.k = size / span
        self.w = round((self.x1 - self.x0) * self.k)
        self.h = round((self.y1 - self.y0) * self.k)
        self.root = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=str(self.w),
                               height=str(self.h), viewBox=f"0 0 {self.w} {self.h}")

    def pt(self, x, y):
        return (float(x) - self.x0) * self.k, (self.y1 - float(y)) * self.k

    def path(self, loops, **attrs):
        d = []
        for loop in loops:
            pts = [self.pt(x, y) for x, y in loop]
            d.append("M " + " L ".join(f"{u:.2f} {v:.2f}" for u, v in pts) + " Z")
        ET.SubElement(self.root, "path", d=" ".join(d), **attrs)

    def line(self, p, q, **attrs):
        (a, b), (c, d) = self.pt(*p), self.pt(*q)
        ET.SubElement(self.root, "line", x1=f"{a:.2f}", y1=f"{b:.2f}", x2=f"{c:.2f}",
                      y2=f"{d:.2f}", **attrs)

    def polyline(self, pts, **attrs):
        s = " ".join(f"{u:.2f},{v:.2f}" for u, v in (self.pt(x, y) for x, y in pts))
        ET.SubElement(self.root, "polyline", points=s, fill="none", **attrs)

    def dot(self, p, r=4, **attrs):
        u, v = self.pt(*p)
        ET.SubElement(self.root, "circle", cx=f"{u:.2f}", cy=f"{v:.2f}", r=str(r), **attrs)

    def tostring(self):
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def zero_contours(q, box, resolution=256):
    """Closed loops of {q = 0} inside ``box`` as arrays of (x, y) points."""
    (x0, x1), (y0, y1) = [(float(a), float(b)) for a, b in box]
    xs = np.linspace(x0, x1, resolution + 1)
    ys = np.linspace(y0, y1, resolution + 1)
    vals = NumPoly(q).grid([xs, ys])
    out = []
    for c in measure.find_contours(vals, 0.0):
        out.append(np.stack([np.interp(c[:, 0], np.arange(len(xs)), xs),
                             np.interp(c[:, 1], np.arange(len(ys)), ys)], axis=1))
    return out


def render_domain(q, graph=None, points=None, resolution=256, box=None) -> str:
    """SVG of {q >= 0}: shaded region, zero curve, and when given the Reeb
    graph drawn through its critical ``points`` (a map from vertex id to (x, y))."""
    box = box or domain_box(q)
    cv = _Canvas(box)
    loops = zero_contours(q, box, resolution)
    cv.path(loops, fill="#cfe3f6", stroke="none", **{"fill-rule": "evenodd", "class": "domain"})
    cv.path(loops, fill="none", stroke="#1f4e79", **{"stroke-width": "1.5", "class": "boundary"})
    if graph is not None and points:
        for u, v in graph.edges:
            cv.line(points[u], points[v], stroke="#b22222", **{"stroke-width": "1.2",
                                                              "class": "edge"})
        for v, x, d in graph.vertices:
            cv.dot(points[v], fill="#b22222", **{"class": "vertex", "data-id": str(v),
                                                  "data-degree": str(d)})
    return cv.tostring()


def render_embedding(e) -> str:
    """SVG of an upward embedding: vertices and their x-monotone routes."""
    xs = [float(x) for x, _ in e.positions.values()]
    ys = [float(y) for _, y in e.positions.values()]
    for _, _, pts in e.routes:
        ys.extend(float(y) for _, y in pts)
    box = ((min(xs) - 1, max(xs) + 1), (min(ys) - 1, max(ys) + 1))
    cv = _Canvas(box)
    for u, v, pts in e.routes:
        cv.polyline(pts, stroke="#333333", **{"stroke-width": "1.5", "class": "edge"})
    for v, p in e.positions.items():
        cv.dot(p, fill="#b22222", **{"class": "vertex", "data-id": str(v)})
    return cv.tostring()
