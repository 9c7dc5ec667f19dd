"""Configuration and the thickened field of an embedded graph."""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from ..errors import UnrealizableEmbedding
from ..poly.core import MultiPoly
from .embed import EmbeddedGraph
from .layout import LayoutParams, assemble, bounding_box, decompose, field_values, solve_layout


@dataclass(frozen=True)
class RealizationConfig:
    tube_radius: Fraction = Fraction(1, 8)
    blend_sharpness: Fraction = Fraction(4)
    fit_degree: int = 8
    coeff_denominator_bound: int = 10 ** 6
    seal_coefficient: Fraction = Fraction(1, 10 ** 6)
    max_retries: int = 4

    def __post_init__(self):
        for name in ("tube_radius", "blend_sharpness", "seal_coefficient"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.tube_radius <= 0:
            raise ValueError("tube_radius must be positive")
        if self.blend_sharpness <= 0:
            raise ValueError("blend_sharpness must be positive")
        if self.seal_coefficient <= 0:
            raise ValueError("seal_coefficient must be positive")
        if self.fit_degree < 4 or self.fit_degree % 2:
            raise ValueError("fit_degree must be even and at least 4")
        if self.coeff_denominator_bound < 1 or self.max_retries < 0:
            raise ValueError("coeff_denominator_bound and max_retries must be natural")

    def layout_params(self, attempt=0) -> LayoutParams:
        """Layout constants for the given retry.  Later attempts widen the
        gaps after caps, flatten the branching angles and thin the tubes."""
        base = LayoutParams(width=self.tube_radius, sharp=self.blend_sharpness,
                            grid=min(256, self.coeff_denominator_bound))
        schedule = [
            {},
            {"cap_gap": Fraction(4)},
            {"slope_lo": 1.0, "depth": Fraction(3, 4)},
            {"cap_gap": Fraction(4), "width": self.tube_radius / 2},
            {"slope_lo": 1.0, "depth": Fraction(3, 4), "width": self.tube_radius / 2},
        ]
        step = schedule[attempt % len(schedule)]
        lp = replace(base, **step)
        for _ in range(attempt // len(schedule)):
            lp = replace(lp, width=lp.width / 2)
        return lp

    def as_dict(self):
        return {
            "tube_radius": str(self.tube_radius),
            "blend_sharpness": str(self.blend_sharpness),
            "fit_degree": self.fit_degree,
            "coeff_denominator_bound": self.coeff_denominator_bound,
            "seal_coefficient": str(self.seal_coefficient),
            "max_retries": self.max_retries,
        }


class ThickenedField:
    """The blended field of a laid-out embedding.

    Calling it evaluates the field in floating point; ``polynomial`` gives the
    same field exactly, cleared of denominators.  Both are positive inside.
    """

    def __init__(self, decomposition, params: LayoutParams):
        self.decomposition = decomposition
        self.params = params
        self._poly = None

    def __call__(self, x, y):
        return field_values(self.decomposition, x, y, float(self.params.sharp))

    def polynomial(self) -> MultiPoly:
        if self._poly is None:
            self._poly = assemble(self.decomposition, self.params.sharp)
        return self._poly

    def box(self, margin=1):
        """((xlo, xhi), (ylo, yhi)) containing the region with a margin."""
        return bounding_box(self.decomposition, margin)

    def grid(self, n=400, margin=1):
        (x0, x1), (y0, y1) = self.box(margin)
        xs = np.linspace(float(x0), float(x1), n)
        ys = np.linspace(float(y0), float(y1), n)
        X, Y = np.meshgrid(xs, ys)
        return X, Y, self(X, Y)


def thicken_implicit(e: EmbeddedGraph, c: RealizationConfig = None,
                     params: LayoutParams = None) -> ThickenedField:
    """Lay out tubes around the routes of ``e`` and blend them.

    Raises UnrealizableEmbedding when the embedding is not made of lens
    faces, and ClearanceViolated when no layout keeps the tubes apart."""
    c = c or RealizationConfig()
    if e.script is None:
        raise UnrealizableEmbedding("the embedding carries no sweep script")
    params = params or c.layout_params()
    d = decompose(e.script)
    solve_layout(d, params)
    return ThickenedField(d, params)
