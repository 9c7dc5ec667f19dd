"""Runtime knobs read from the environment."""

import os

DEFAULT_PRECISION_BUDGET = 400


def precision_budget():
    """Refinement budget; REEBFORGE_PRECISION_BUDGET overrides the default."""
    raw = os.environ.get("REEBFORGE_PRECISION_BUDGET")
    if not raw:
        return DEFAULT_PRECISION_BUDGET
    try:
        v = int(raw)
    except ValueError:
        return DEFAULT_PRECISION_BUDGET
    return max(v, 1)
