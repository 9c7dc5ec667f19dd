"""Realization of good-oriented graphs as planar algebraic domains, checked
by the exact Reeb graph machinery."""

from __future__ import annotations

from ..errors import (ClearanceViolated, DegenerateInput, IllConditionedFit, InternalSweepError,
                      NonRegularFiber, NotCertifiablyCompact, NotMorse, NotStable,
                      PrecisionExhausted, RealizationFailed, Singular)
from ..graph.core import Multigraph, OrientationWitness, ordered_from_witness
from ..graph.orientation import is_good_orientation, ordered_isomorphic
from ..reeb2d import DomainSpec2, check_compact, check_nonsingular, check_stable, poincare_reeb_graph
from .embed import upward_embed
from .thicken import RealizationConfig, thicken_implicit

_RECOVERABLE = (ClearanceViolated, DegenerateInput, IllConditionedFit, InternalSweepError,
                NonRegularFiber, NotCertifiablyCompact, NotMorse, NotStable,
                PrecisionExhausted, Singular)


def verify_realization(q, g: Multigraph, w: OrientationWitness):
    """(ok, graph): the exact certificates hold and the Reeb graph of
    {q >= 0} is ordered-isomorphic to (g, w)."""
    d = DomainSpec2(q)
    if not (check_nonsingular(d) and check_compact(d) and check_stable(d)):
        return False, None
    r = poincare_reeb_graph(d)
    return ordered_isomorphic(r, ordered_from_witness(g, w)), r


def realize_2d(g: Multigraph, w: OrientationWitness, c: RealizationConfig = None, report=None):
    """A polynomial q whose domain {q >= 0} has (g, w) as Reeb graph, and that graph.

    Attempt k lays the tubes out with ``c.layout_params(k)``.  ``report``,
    when given, is filled with the metadata of the accepted attempt.
    """
    c = c or RealizationConfig()
    degrees = set(g.degrees().values())
    if not degrees <= {1, 3}:
        raise ValueError("realization needs every vertex degree in {1, 3}")
    if not is_good_orientation(g, w):
        raise ValueError("the witness is not a good orientation")
    e = upward_embed(g, w)
    last_graph = last_poly = None
    errors = []
    for attempt in range(c.max_retries + 1):
        params = c.layout_params(attempt)
        try:
            field = thicken_implicit(e, c, params)
            q = field.polynomial()
            ok, r = verify_realization(q, g, w)
        except _RECOVERABLE as exc:
            errors.append(f"attempt {attempt}: {type(exc).__name__}: {exc}")
            continue
        last_poly = q
        if r is not None:
            last_graph = r
        if ok:
            if report is not None:
                report.update({
                    "status": "verified",
                    "retries": attempt,
                    "degree": q.degree(),
                    "graph": r.to_json_obj(),
                    "layout": {
                        "tube_radius": str(params.width),
                        "blend_sharpness": str(params.sharp),
                        "cap_gap": str(params.cap_gap),
                        "slope_lo": params.slope_lo,
                        "depth": str(params.depth),
                        "grid": params.grid,
                    },
                    "config": c.as_dict(),
                })
            return q, r
        errors.append(f"attempt {attempt}: Reeb graph differs from the input")
    raise RealizationFailed("no attempt verified (" + "; ".join(errors) + ")",
                            last_graph=last_graph, last_poly=last_poly)
