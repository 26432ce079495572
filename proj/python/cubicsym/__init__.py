"""Exact symmetry algebras of plane-cubic Poisson structures.

Thin Python wrapper over the C++ core: classification of rational plane
cubics into the nine projective types, exact computation of the symmetry
algebra of the associated Poisson structure (strict and divisor modes),
its structure theory (radical, center, reductivity), and the resulting
obstruction to constant scalar curvature.
"""

import json as _json

from cubicsym._core import (  # noqa: F401
    __version__,
    act,
    analyze_json,
    analyze_text,
    annihilator_basis,
    annihilator_dimension,
    classify,
    classify_json,
    is_reductive,
    normal_forms_json,
    render,
    type_number,
)


def analyze(expr, mode="both"):
    """Full analysis report as a dict (see analyze_text for the text form)."""
    return _json.loads(analyze_json(expr, mode))


def classify_info(expr):
    """Curve type plus exact singular data as a dict."""
    return _json.loads(classify_json(expr))


def normal_forms():
    """The nine normal forms in figure order as a list of dicts."""
    return _json.loads(normal_forms_json())


__all__ = [
    "__version__",
    "act",
    "analyze",
    "analyze_json",
    "analyze_text",
    "annihilator_basis",
    "annihilator_dimension",
    "classify",
    "classify_info",
    "classify_json",
    "is_reductive",
    "normal_forms",
    "normal_forms_json",
    "render",
    "type_number",
]
