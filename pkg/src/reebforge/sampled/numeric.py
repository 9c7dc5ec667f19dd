"""Floating-point evaluation of MultiPoly, pointwise and on tensor grids."""

from __future__ import annotations

import numpy as np

from ..poly.core import MultiPoly


class NumPoly:
    """A polynomial with float coefficients, scaled so the largest has size 1.

    Only signs and zeros are meaningful after scaling; ``scale`` records the
    factor that was divided out.
    """

    def __init__(self, p: MultiPoly, scale=None):
        self.nvars = p.nvars
        items = list(p.items())
        if scale is None:
            scale = max((abs(v) for _, v in items), default=1) or 1
        self.scale = scale
        self.exps = np.array([e for e, _ in items], dtype=int).reshape(len(items), p.nvars)
        self.coefs = np.array([float(v / scale) for _, v in items])
        self.degree = p.degree() if items else 0
        shape = tuple(int(self.exps[:, i].max()) + 1 if items else 1 for i in range(p.nvars))
        self.tensor = np.zeros(shape)
        for e, v in zip(self.exps, self.coefs):
            self.tensor[tuple(e)] += v

    def __call__(self, points):
        """Values at an (m, nvars) array of points."""
        P = np.asarray(points, dtype=float).reshape(-1, self.nvars)
        out = np.zeros(len(P))
        if not len(self.coefs):
            return out
        d = int(self.exps.max())
        pows = [np.ones((len(P), d + 1)) for _ in range(self.nvars)]
        for i in range(self.nvars):
            for j in range(1, d + 1):
                pows[i][:, j] = pows[i][:, j - 1] * P[:, i]
        for e, v in zip(self.exps, self.coefs):
            term = np.full(len(P), v)
            for i, ei in enumerate(e):
                if ei:
                    term = term * pows[i][:, ei]
            out += term
        return out

    def partial_tensor(self, axes):
        """Contract every variable but the first against the sample axes:
        returns T with T[i, b, c, ...] = sum over the rest of the tensor."""
        T = self.tensor
        for k in range(self.nvars - 1, 0, -1):
            V = np.vander(np.asarray(axes[k], float), T.shape[k], increasing=True)
            T = np.tensordot(T, V, axes=([k], [1]))
            # the new axis lands last; move it back into place
            T = np.moveaxis(T, -1, k)
        return T

    def plane(self, T, x):
        """Values on the grid slice at first coordinate x, from ``partial_tensor``."""
        v = np.power(float(x), np.arange(T.shape[0]))
        return np.tensordot(v, T, axes=([0], [0]))

    def grid(self, axes):
        """Values on the full tensor grid spanned by ``axes``."""
        T = self.partial_tensor(axes)
        V = np.vander(np.asarray(axes[0], float), T.shape[0], increasing=True)
        return np.tensordot(V, T, axes=([1], [0]))
