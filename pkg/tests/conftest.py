"""Shared fixtures and the independent pixel oracles."""

import numpy as np
import pytest
from hypothesis import settings
from scipy import ndimage

from reebforge.poly import parse_poly
from reebforge.sampled import NumPoly, domain_box

settings.register_profile("repo", max_examples=40, deadline=None)
settings.load_profile("repo")

DISC = "1 - x^2 - y^2"
ANNULUS = "(x^2+y^2-1)*(4-x^2-y^2)"
TWO_DISCS = "-((x-3)^2+y^2-1)*((x+3)^2+y^2-1)"
TWO_CIRCLES = "(1-x^2-(y-5)^2)*(1-x^2-(y+5)^2)"
ELLIPTIC = "x^3 - x - y^2"
POINT = "x^2 + y^2"

# (text, vertices, edges, degree sequence in x order)
EXACT_FIXTURES = {
    "disc": (DISC, 2, 1, [1, 1]),
    "annulus": (ANNULUS, 4, 4, [1, 3, 3, 1]),
    "two_discs": (TWO_DISCS, 4, 2, [1, 1, 1, 1]),
    "shifted_disc": ("1 - (x-3)^2 - y^2", 2, 1, [1, 1]),
    "ellipse": ("1 - 1/4*x^2 - 4*y^2", 2, 1, [1, 1]),
    "tilted_annulus": ("((x-1/3*y)^2+y^2-1)*(9-(x+1/5*y)^2-y^2)", 4, 4, [1, 3, 3, 1]),
}


def P(text, n=2):
    return parse_poly(text, n)


def _sample(q, resolution, pad=0.05):
    """Samples of q >= 0 on a grid fitted to the domain's extent along each
    axis, found by a finer pass over the (cubic, loose) domain_box."""
    f = NumPoly(q)
    coarse = [np.linspace(float(lo), float(hi), 1025) for lo, hi in domain_box(q)]
    m = f.grid(coarse) >= 0
    axes = []
    for k, a in enumerate(coarse):
        hit = np.nonzero(m.any(axis=tuple(i for i in range(m.ndim) if i != k)))[0]
        lo, hi = a[max(hit.min() - 1, 0)], a[min(hit.max() + 1, len(a) - 1)]
        axes.append(np.linspace(lo - pad * (hi - lo), hi + pad * (hi - lo), resolution))
    return f.grid(axes) >= 0


def pixel_euler(q, resolution=512):
    """Euler characteristic V - E + F of the cubical complex spanned by the
    grid samples where q >= 0 (the standard 4-connected digital estimate)."""
    m = _sample(q, resolution)
    v = int(m.sum())
    e = int((m[1:, :] & m[:-1, :]).sum() + (m[:, 1:] & m[:, :-1]).sum())
    f = int((m[1:, 1:] & m[:-1, 1:] & m[1:, :-1] & m[:-1, :-1]).sum())
    return v - e + f


def pixel_components(q, resolution=512):
    _, count = ndimage.label(_sample(q, resolution))
    return count


@pytest.fixture
def annulus():
    return P(ANNULUS)


@pytest.fixture
def disc():
    return P(DISC)
