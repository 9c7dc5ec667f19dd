"""Least-squares polynomial approximation of a sampled field.

The fit runs in coordinates normalised to [-1, 1] on each axis, is rounded
to rationals with bounded denominators, and is sealed with a negative
multiple of |u|^d so that the top form is negative definite.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

from ..errors import IllConditionedFit
from ..poly.core import MultiPoly
from ..poly.ops import is_negdef_top_form_2d
from .thicken import RealizationConfig, ThickenedField

MAX_CONDITION = 1e10


def monomials(nvars, degree):
    """Exponent tuples of total degree <= degree, by degree then lexicographically."""
    out = [e for e in product(range(degree + 1), repeat=nvars) if sum(e) <= degree]
    return sorted(out, key=lambda e: (sum(e), tuple(-v for v in e)))


def _design(points, exps):
    n, k = points.shape
    d = max(sum(e) for e in exps)
    pows = [np.ones((n, d + 1)) for _ in range(k)]
    for i in range(k):
        for j in range(1, d + 1):
            pows[i][:, j] = pows[i][:, j - 1] * points[:, i]
    cols = []
    for e in exps:
        col = np.ones(n)
        for i, ei in enumerate(e):
            if ei:
                col = col * pows[i][:, ei]
        cols.append(col)
    return np.stack(cols, axis=1)


def _samples(f, box, degree, seed=0):
    """Regular grid plus points near the zero level, in normalised coordinates."""
    k = len(box)
    m = max(4 * (degree + 1), 40) if k == 2 else 2 * (degree + 2)
    axes = [np.linspace(-1.0, 1.0, m) for _ in range(k)]
    grid = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    fine_axes = [np.linspace(-1.0, 1.0, 3 * m) for _ in range(k)]
    fine = np.stack([a.ravel() for a in np.meshgrid(*fine_axes, indexing="ij")], axis=1)
    vals = f(fine)
    near = fine[np.abs(vals) < 0.5]
    if len(near) > 4 * len(grid):
        rng = np.random.default_rng(seed)
        near = near[rng.choice(len(near), 4 * len(grid), replace=False)]
    return np.concatenate([grid, near], axis=0)


def _linear(nvars, i, centre, half):
    """(x_i - centre) / half as a polynomial."""
    return (MultiPoly.var(nvars, i) - MultiPoly.const(nvars, centre)) * MultiPoly.const(nvars, 1 / half)


def fit_polynomial(field, c: RealizationConfig = None, box=None, degree=None, seed=0) -> MultiPoly:
    """Fit ``field`` by a polynomial of total degree ``c.fit_degree``.

    ``field`` is a ThickenedField or a callable taking one array per
    coordinate; ``box`` lists rational (lo, hi) bounds per axis and defaults
    to the field's own box.  The result is positive roughly where the field is.
    """
    c = c or RealizationConfig()
    degree = degree or c.fit_degree
    if isinstance(field, ThickenedField) and box is None:
        box = field.box()
    if box is None:
        raise ValueError("a box is needed to sample a plain callable")
    box = [(Fraction(lo), Fraction(hi)) for lo, hi in box]
    if any(hi <= lo for lo, hi in box):
        raise ValueError("empty sampling box")
    k = len(box)
    centre = [(lo + hi) / 2 for lo, hi in box]
    half = [(hi - lo) / 2 for lo, hi in box]

    def normalised(u):
        coords = [float(centre[i]) + float(half[i]) * u[:, i] for i in range(k)]
        return np.clip(np.asarray(field(*coords), dtype=float), -1.0, 1.0)

    pts = _samples(normalised, box, degree, seed)
    vals = normalised(pts)
    exps = monomials(k, degree)
    A = _design(pts, exps)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] <= 0 or sv[0] / sv[-1] > MAX_CONDITION:
        raise IllConditionedFit(f"design matrix is numerically singular at degree {degree}")
    coef, *_ = np.linalg.lstsq(A, vals, rcond=None)
    scale = float(np.max(np.abs(coef)))
    if scale == 0:
        raise IllConditionedFit("the fitted polynomial vanishes")
    terms = {}
    for e, v in zip(exps, coef / scale):
        r = Fraction(float(v)).limit_denominator(c.coeff_denominator_bound)
        if r:
            terms[e] = r
    fitted = MultiPoly(k, terms)
    norm2 = {}
    for i in range(k):
        e = [0] * k
        e[i] = 2
        norm2[tuple(e)] = Fraction(1)
    radial = MultiPoly(k, norm2) ** (degree // 2)
    # -s |u|^d dominates any top form whose l1 norm is below s
    ceiling = c.seal_coefficient + sum(abs(v) for e, v in terms.items() if sum(e) == degree)
    seal = c.seal_coefficient if k == 2 else ceiling
    while True:
        p_u = fitted - radial * MultiPoly.const(k, seal)
        if k != 2 or seal >= ceiling or is_negdef_top_form_2d(p_u):
            break
        seal = min(seal * 4, ceiling)
    return _to_original(p_u, centre, half)


def _to_original(p_u: MultiPoly, centre, half) -> MultiPoly:
    k = p_u.nvars
    lin = [_linear(k, i, centre[i], half[i]) for i in range(k)]
    d = p_u.degree()
    pows = [[MultiPoly.const(k, 1)] for _ in range(k)]
    for i in range(k):
        for _ in range(d):
            pows[i].append(pows[i][-1] * lin[i])
    out = MultiPoly.zero(k)
    for e, v in p_u.items():
        t = MultiPoly.const(k, v)
        for i, ei in enumerate(e):
            if ei:
                t = t * pows[i][ei]
        out = out + t
    return out
