"""Python bindings for the kodeg core library."""

import json

from ._kodeg import (
    InconsistentProduct,
    KOElem,
    ParseError,
    ValidationError,
    connected_sum,
    connected_sum_bound,
    torus_pattern_rhs,
    cover_count,
    d_of,
    divis_verify,
    epsilon,
    euler_h1_power,
    euler_h1_power_ring,
    euler_rtilde,
    eval,
    expand_family,
    keyrelation_check,
    load_manifold,
    mtorus,
    mu_nu_agree,
    mu_poly,
    nu_poly,
    table_discrepancies,
    verify,
)
from ._kodeg import bound_json as _bound_json


def bound(manifold):
    """Bound report for a manifold given as a dict or a JSON string."""
    text = manifold if isinstance(manifold, str) else json.dumps(manifold)
    return json.loads(_bound_json(text))


__all__ = [
    "InconsistentProduct",
    "KOElem",
    "ParseError",
    "ValidationError",
    "bound",
    "connected_sum",
    "connected_sum_bound",
    "torus_pattern_rhs",
    "cover_count",
    "d_of",
    "divis_verify",
    "epsilon",
    "euler_h1_power",
    "euler_h1_power_ring",
    "euler_rtilde",
    "eval",
    "expand_family",
    "keyrelation_check",
    "load_manifold",
    "mtorus",
    "mu_nu_agree",
    "mu_poly",
    "nu_poly",
    "table_discrepancies",
    "verify",
]
