"""Exact colourful Steinitz computations over the rationals.

Points are sequences of int, str ("p/q") or fractions.Fraction; results come
back as Fraction. Colours and elements are 0-based.
"""

from ._core import (
    BudgetExceeded,
    NotSpanning,
    ParseError,
    certify_spanning,
    certify_transversal,
    classify,
    colorful_transversal,
    count_spanning_transversals,
    emit_instance,
    generate,
    in_cone,
    min_spanning_partial_size,
    nonspanning_witness,
    parse_instance,
    refine_below_2d,
    spans,
    steinitz_reduce,
    transversal_spans,
)

__all__ = [
    "BudgetExceeded",
    "NotSpanning",
    "ParseError",
    "certify_spanning",
    "certify_transversal",
    "classify",
    "colorful_transversal",
    "count_spanning_transversals",
    "emit_instance",
    "generate",
    "in_cone",
    "min_spanning_partial_size",
    "nonspanning_witness",
    "parse_instance",
    "refine_below_2d",
    "spans",
    "steinitz_reduce",
    "transversal_spans",
]
