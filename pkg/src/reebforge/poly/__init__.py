from .core import Box2, IsolatingInterval, MultiPoly, Rational, UniPoly, as_rational
from .ops import (
    Sign,
    evaluate,
    is_negdef_top_form_2d,
    isolate_real_roots,
    partial_derivative,
    refine_root,
    resultant_wrt_second,
    sign_on_box,
    squarefree_part,
    substitute_first,
    substitute_last,
    top_form,
)
from .text import format_poly, parse_poly

__all__ = [
    "Box2", "IsolatingInterval", "MultiPoly", "Rational", "Sign", "UniPoly",
    "as_rational", "evaluate", "format_poly", "is_negdef_top_form_2d",
    "isolate_real_roots", "parse_poly", "partial_derivative", "refine_root",
    "resultant_wrt_second", "sign_on_box", "squarefree_part", "substitute_first",
    "substitute_last", "top_form",
]
