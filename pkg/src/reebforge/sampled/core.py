"""Sampled Reeb graphs of domains {q >= 0} in R^n.

Nothing here is certified.  Critical values come from Newton's method
started in grid cells where q and its partials in x_2..x_n all change
sign; fibre components are counted on grid slices with scipy's labelling,
and components of neighbouring slabs are matched through the labelled
region between two slices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

import numpy as np
from scipy import ndimage

from ..errors import ResolutionTooCoarse
from ..graph.core import OrderedReebGraph
from ..graph.orientation import ordered_isomorphic
from ..poly.core import MultiPoly
from ..poly.ops import partial_derivative
from .numeric import NumPoly

DEDUP = 2.0 ** -20


@dataclass(frozen=True)
class GridSpec:
    box: tuple
    resolution: int = 128
    slab_margin: Fraction = Fraction(0)

    def __post_init__(self):
        box = tuple((Fraction(lo), Fraction(hi)) for lo, hi in self.box)
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "slab_margin", Fraction(self.slab_margin))
        if self.resolution < 8:
            raise ValueError("resolution must be at least 8")
        if not box or any(hi <= lo for lo, hi in box):
            raise ValueError("the grid box must be nonempty")

    @classmethod
    def cube(cls, n, half, resolution=128):
        return cls(tuple((-Fraction(half), Fraction(half)) for _ in range(n)), resolution)

    def axes(self, resolution=None):
        r = resolution or self.resolution
        return [np.linspace(float(lo), float(hi), r + 1) for lo, hi in self.box]

    @property
    def width(self):
        return max(float(hi - lo) for lo, hi in self.box)

    def with_resolution(self, r):
        return GridSpec(self.box, r, self.slab_margin)


@dataclass
class SampledReebGraph:
    vertices: list            # (x, degree), x a dyadic Fraction, sorted by x
    edges: list               # (i, j) vertex index pairs, i < j
    resolution: int
    confidence: str = "heuristic"
    points: list = field(default_factory=list, repr=False)

    def degree_sequence(self):
        return [d for _, d in self.vertices]

    def to_ordered(self) -> OrderedReebGraph:
        xs = {f"s{i}": x for i, (x, _) in enumerate(self.vertices)}
        return OrderedReebGraph.from_parts(xs, [(f"s{i}", f"s{j}") for i, j in self.edges])

    def to_json_obj(self):
        obj = self.to_ordered().to_json_obj()
        obj["confidence"] = self.confidence
        obj["resolution"] = self.resolution
        return obj


def _system(q: MultiPoly):
    """q and its partials in every variable but the first, with Jacobian rows."""
    n = q.nvars
    fs = [q] + [partial_derivative(q, i) for i in range(2, n + 1)]
    scale = max((abs(v) for _, v in q.items()), default=1) or 1
    num = [NumPoly(f, scale) for f in fs]
    jac = [[NumPoly(partial_derivative(f, j), scale) for j in range(1, n + 1)] for f in fs]
    return num, jac


def _seeds(num, grid: GridSpec):
    """Centres of grid cells where every function of the system changes sign."""
    axes = grid.axes()
    n = len(axes)
    tensors = [f.partial_tensor(axes) for f in num]
    seeds = []
    prev = None
    for a, x in enumerate(axes[0]):
        cur = [f.plane(T, x) for f, T in zip(num, tensors)]
        if prev is not None:
            mask = None
            for P0, P1 in zip(prev, cur):
                lo, hi = _cell_range(P0, P1, n - 1)
                m = (lo <= 0) & (hi >= 0)
                mask = m if mask is None else mask & m
            for idx in zip(*np.nonzero(mask)):
                c = [(axes[0][a - 1] + x) / 2]
                for k, i in enumerate(idx):
                    c.append((axes[k + 1][i] + axes[k + 1][i + 1]) / 2)
                seeds.append(c)
        prev = cur
    return np.array(seeds).reshape(-1, n)


def _cell_range(P0, P1, k):
    """Min and max over the 2^(k+1) corners of every cell between two planes."""
    lo = np.minimum(P0, P1)
    hi = np.maximum(P0, P1)
    for ax in range(k):
        sl0 = [slice(None)] * k
        sl1 = [slice(None)] * k
        sl0[ax] = slice(None, -1)
        sl1[ax] = slice(1, None)
        lo = np.minimum(lo[tuple(sl0)], lo[tuple(sl1)])
        hi = np.maximum(hi[tuple(sl0)], hi[tuple(sl1)])
    return lo, hi


def _newton(num, jac, seeds, iters=60):
    X = np.array(seeds, dtype=float)
    if not len(X):
        return X, np.zeros(0, bool)
    n = X.shape[1]
    for _ in range(iters):
        F = np.stack([f(X) for f in num], axis=1)
        J = np.stack([np.stack([g(X) for g in row], axis=1) for row in jac], axis=1)
        try:
            step = np.linalg.solve(J, F[..., None])[..., 0]
        except np.linalg.LinAlgError:
            step = np.stack([np.linalg.lstsq(j, f, rcond=None)[0] for j, f in zip(J, F)])
        step = np.nan_to_num(step, nan=0.0, posinf=0.0, neginf=0.0)
        X = X - step
    F = np.stack([f(X) for f in num], axis=1)
    ok = np.all(np.isfinite(X), axis=1) & (np.max(np.abs(F), axis=1) < 1e-9)
    return X, ok


def critical_points_numeric(q: MultiPoly, grid: GridSpec):
    """Distinct numeric solutions of {q = 0, dq/dx_i = 0 (i >= 2)} in the box,
    sorted by first coordinate.  Seeds that fail to converge are dropped."""
    num, jac = _system(q)
    X, ok = _newton(num, jac, _seeds(num, grid))
    lo = np.array([float(a) for a, _ in grid.box])
    hi = np.array([float(b) for _, b in grid.box])
    inside = np.all((X >= lo) & (X <= hi), axis=1) if len(X) else ok
    X = X[ok & inside]
    tol = DEDUP * grid.width
    out = []
    for p in X[np.argsort(X[:, 0])] if len(X) else []:
        if all(np.max(np.abs(p - r)) > tol for r in out):
            out.append(p)
    return sorted(out, key=lambda p: p[0])


def numeric_critical_values(q: MultiPoly, n: int, grid: GridSpec):
    if n != q.nvars or n < 2:
        raise ValueError("n must equal the number of variables and be at least 2")
    return [float(p[0]) for p in critical_points_numeric(q, grid)]


def _labels(mask):
    return ndimage.label(mask)


def sampled_reeb(q: MultiPoly, n: int, grid: GridSpec) -> SampledReebGraph:
    if n != q.nvars or n < 2:
        raise ValueError("n must equal the number of variables and be at least 2")
    pts = critical_points_numeric(q, grid)
    cvals = [float(p[0]) for p in pts]
    axes = grid.axes()
    h = (axes[0][-1] - axes[0][0]) / grid.resolution
    margin = float(grid.slab_margin) or h / 4
    for a, b in zip(cvals, cvals[1:]):
        if b - a <= 2 * margin:
            raise ResolutionTooCoarse("two critical values are closer than the slab margin")
    f = NumPoly(q)
    T = f.partial_tensor(axes)
    x0, x1 = axes[0][0], axes[0][-1]
    walls = [x0] + [(a + b) / 2 for a, b in zip(cvals, cvals[1:])] + [x1]
    # slice at every wall; a thick slab spans two neighbouring walls
    wall_lab = []
    for x in walls:
        lab, count = _labels(f.plane(T, x) >= 0)
        wall_lab.append((lab, count))
    if wall_lab[0][1] or wall_lab[-1][1]:
        raise ResolutionTooCoarse("the domain reaches the sides of the box")
    # edge pieces are wall components; vertex k sits between walls k and k+1
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    touches = []      # per vertex: list of wall components meeting it
    for k, c in enumerate(cvals):
        xs = np.linspace(walls[k], walls[k + 1], max(3, int(np.ceil((walls[k + 1] - walls[k]) / h)) + 1))
        block = np.stack([f.plane(T, x) >= 0 for x in xs], axis=0)
        lab3, _ = _labels(block)
        crit = _component_at(lab3, xs, axes, pts[k])
        if crit == 0:
            raise ResolutionTooCoarse("a critical point is not resolved by the grid")
        left, right = wall_lab[k][0], wall_lab[k + 1][0]
        mine = []
        links = {}
        for side, wl, plane in (("L", left, lab3[0]), ("R", right, lab3[-1])):
            for comp in range(1, wl.max() + 1 if wl.size else 1):
                cells = plane[wl == comp]
                cells = cells[cells > 0]
                if not len(cells):
                    raise ResolutionTooCoarse("a fibre component is lost inside a slab")
                owner = int(np.bincount(cells).argmax())
                key = (k + (0 if side == "L" else 1), comp)
                if owner == crit:
                    mine.append(key)
                else:
                    links.setdefault(owner, []).append(key)
        for owner, keys in links.items():
            if len(keys) != 2 or keys[0][0] == keys[1][0]:
                raise ResolutionTooCoarse("a regular tube does not connect one component on each side")
            parent[find(keys[0])] = find(keys[1])
        touches.append(mine)
    # each class of wall components is one edge; it meets exactly two vertices
    ends = {}
    for v, keys in enumerate(touches):
        for key in keys:
            ends.setdefault(find(key), []).append(v)
    edges = []
    for cls, vs in ends.items():
        if len(vs) != 2:
            raise ResolutionTooCoarse("an edge of the sampled graph does not have two ends")
        edges.append(tuple(sorted(vs)))
    deg = [0] * len(cvals)
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    verts = [(Fraction(round(c * 2 ** 32), 2 ** 32), d) for c, d in zip(cvals, deg)]
    return SampledReebGraph(verts, sorted(edges), grid.resolution, points=[tuple(p) for p in pts])


def _component_at(lab3, xs, axes, p):
    """Label of the block component nearest to the critical point p."""
    i = int(np.argmin(np.abs(xs - p[0])))
    idx = [i]
    for k in range(1, len(p)):
        idx.append(int(np.argmin(np.abs(axes[k] - p[k]))))
    window = []
    for k, c in enumerate(idx):
        window.append(slice(max(0, c - 2), c + 3))
    sub = lab3[tuple(window)]
    vals = sub[sub > 0]
    if not len(vals):
        return 0
    return int(np.bincount(vals).argmax())


def double_polynomial(q: MultiPoly) -> MultiPoly:
    """y^2 - q(x_1..x_n) with the new variable y appended last."""
    n = q.nvars
    lifted = MultiPoly(n + 1, {e + (0,): v for e, v in q.items()})
    return MultiPoly.var(n + 1, n) ** 2 - lifted


def double_grid(q: MultiPoly, grid: GridSpec) -> GridSpec:
    """Extend a planar grid by a symmetric range for the new coordinate
    that contains every |y| <= sqrt(q)."""
    if len(grid.box) == q.nvars + 1:
        return grid
    vals = NumPoly(q, 1).grid(grid.axes(min(grid.resolution, 256)))
    top = sqrt(max(float(vals.max()), 0.0))
    half = Fraction(top * 1.25 + grid.width / grid.resolution * 4).limit_denominator(64)
    return GridSpec(grid.box + ((-half, half),), grid.resolution, grid.slab_margin)


def sampled_double_reeb(q: MultiPoly, grid: GridSpec) -> SampledReebGraph:
    """Sampled Reeb graph of the region bounded by the double {y^2 = q}."""
    return sampled_reeb(-double_polynomial(q), q.nvars + 1, double_grid(q, grid))


def check_double_iso(d, grid: GridSpec) -> bool:
    from ..reeb2d import poincare_reeb_graph
    r = poincare_reeb_graph(d)
    s = sampled_double_reeb(d.q, grid)
    return ordered_isomorphic(r, s.to_ordered())


def resolution_stable_reeb(q: MultiPoly, n: int, grid: GridSpec) -> SampledReebGraph:
    """sampled_reeb at the grid's resolution and at twice it; raises
    ResolutionTooCoarse unless both give the same ordered graph."""
    a = sampled_reeb(q, n, grid)
    b = sampled_reeb(q, n, grid.with_resolution(2 * grid.resolution))
    if not ordered_isomorphic(a.to_ordered(), b.to_ordered()):
        raise ResolutionTooCoarse("the sampled graph changes between refinement levels")
    return b


def domain_box(q: MultiPoly, resolution=48, limit=2 ** 12):
    """A cube around the origin containing every sample of {q >= 0} found in
    the cube twice its size, padded by a quarter.  Heuristic, like
    everything here."""
    f = NumPoly(q)
    n = q.nvars
    half = 1.0
    while half <= limit:
        ticks = np.linspace(-2 * half, 2 * half, 2 * resolution + 1)
        inside = f.grid([ticks] * n) >= 0
        if inside.any():
            idx = np.nonzero(inside)
            reach = max(float(np.abs(ticks[i]).max()) for i in idx)
            if reach < half:
                pad = Fraction(half) * Fraction(5, 4)
                return tuple((-pad, pad) for _ in range(n))
        half *= 2
    raise ResolutionTooCoarse("no bounding cube found; the domain may be unbounded or tiny")
