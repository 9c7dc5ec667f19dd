"""Domains in R^n with degree-2 Reeb vertices: spherical shells and balls
with a tube drilled out."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import BadRadii, IllConditionedFit, TubeEscapesDomain
from ..poly.core import MultiPoly
from ..sampled.numeric import NumPoly
from .fit import fit_polynomial
from .thicken import RealizationConfig


def nested_spheres(n: int, r1, r2) -> MultiPoly:
    """-(|x|^2 - r1^2)(|x|^2 - r2^2): nonnegative exactly on the shell r1 <= |x| <= r2."""
    r1, r2 = Fraction(r1), Fraction(r2)
    if n < 2:
        raise BadRadii("the ambient dimension must be at least 2")
    if not 0 < r1 < r2:
        raise BadRadii(f"need 0 < r1 < r2, got r1={r1}, r2={r2}")
    norm = MultiPoly.zero(n)
    for i in range(n):
        norm = norm + MultiPoly.var(n, i) ** 2
    return -(norm - MultiPoly.const(n, r1 * r1)) * (norm - MultiPoly.const(n, r2 * r2))


@dataclass(frozen=True)
class TubeSpec:
    waypoints: tuple
    radius: Fraction

    def __post_init__(self):
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.waypoints)
        object.__setattr__(self, "waypoints", pts)
        object.__setattr__(self, "radius", Fraction(self.radius))
        if len(pts) < 2 or any(len(p) != 3 for p in pts):
            raise ValueError("a tube needs at least two waypoints in R^3")
        if any(b[0] <= a[0] for a, b in zip(pts, pts[1:])):
            raise ValueError("tube waypoints must be strictly increasing in x")
        if self.radius <= 0:
            raise ValueError("tube radius must be positive")

    def distance(self, x, y, z):
        """Euclidean distance from each point to the polyline."""
        P = np.stack([np.asarray(x, float), np.asarray(y, float), np.asarray(z, float)], axis=-1)
        best = np.full(P.shape[:-1], np.inf)
        pts = [np.array([float(c) for c in p]) for p in self.waypoints]
        for a, b in zip(pts, pts[1:]):
            ab = b - a
            t = np.clip(((P - a) @ ab) / (ab @ ab), 0.0, 1.0)
            foot = a + t[..., None] * ab
            best = np.minimum(best, np.linalg.norm(P - foot, axis=-1))
        return best

    def box(self, margin):
        pts = np.array([[float(c) for c in p] for p in self.waypoints])
        lo, hi = pts.min(axis=0) - margin, pts.max(axis=0) + margin
        return [(Fraction(a).limit_denominator(64), Fraction(b).limit_denominator(64))
                for a, b in zip(lo, hi)]

    def neighbourhood(self, count=24):
        """Points on the boundary of the closed radius-r neighbourhood."""
        r = float(self.radius)
        pts = [np.array([float(c) for c in p]) for p in self.waypoints]
        out = []
        for a, b in zip(pts, pts[1:]):
            ab = b - a
            u = ab / np.linalg.norm(ab)
            helper = np.array([0.0, 0.0, 1.0]) if abs(u[2]) < 0.9 else np.array([0.0, 1.0, 0.0])
            v = np.cross(u, helper)
            v /= np.linalg.norm(v)
            w = np.cross(u, v)
            for t in np.linspace(0, 1, count):
                for th in np.linspace(0, 2 * np.pi, count, endpoint=False):
                    out.append(a + t * ab + r * (np.cos(th) * v + np.sin(th) * w))
        for c in (pts[0], pts[-1]):
            for th in np.linspace(0, np.pi, count):
                for ph in np.linspace(0, 2 * np.pi, count, endpoint=False):
                    out.append(c + r * np.array([np.cos(th), np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph)]))
        return np.array(out)


def attach_tube_3d(f: MultiPoly, t: TubeSpec, c: RealizationConfig = None) -> MultiPoly:
    """Drill the tube ``t`` out of the domain {f >= 0}.

    The tube field 1 - dist^2 / r^2 is fitted by a polynomial g that is
    positive on the tube only; the result f * (-g) is nonnegative on the
    domain minus the open tube."""
    c = c or RealizationConfig()
    if f.nvars != 3:
        raise ValueError("attach_tube_3d needs a polynomial in 3 variables")
    fn = NumPoly(f)
    if np.any(fn(t.neighbourhood()) <= 0):
        raise TubeEscapesDomain("the closed tube neighbourhood leaves the domain")
    r = float(t.radius)
    span = max(float(t.waypoints[-1][0] - t.waypoints[0][0]), r)
    box = t.box(max(4 * r, span / 2))

    def field(x, y, z):
        return 1.0 - (t.distance(x, y, z) / r) ** 2

    g = fit_polynomial(field, c, box=box)
    gn = NumPoly(g)
    # the fitted tube must stay positive along the axis and negative away from it
    axis = np.array([[float(a) + s * float(b - a) for a, b in zip(p, q)]
                     for p, q in zip(t.waypoints, t.waypoints[1:]) for s in np.linspace(0, 1, 16)])
    if np.any(gn(axis) <= 0):
        raise IllConditionedFit("the fitted tube does not contain its own axis")
    lo = np.array([float(a) for a, _ in box])
    hi = np.array([float(b) for _, b in box])
    centre, half = (lo + hi) / 2, (hi - lo) / 2
    axes = [np.linspace(cc - 2 * h, cc + 2 * h, 41) for cc, h in zip(centre, half)]
    P = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    far = t.distance(P[:, 0], P[:, 1], P[:, 2]) > 3 * r
    if np.any(gn(P[far]) >= 0):
        raise IllConditionedFit("the fitted tube leaks away from its axis")
    return f * (-g)
