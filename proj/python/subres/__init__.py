"""Exact determinant polynomials, indexed subresultants, and the scaled
product identities connecting them. All arithmetic is exact."""

from ._core import (
    det,
    dp,
    dp_linear_combination,
    generate_system,
    habicht_params,
    ideal_decompose,
    index_set,
    pcdp,
    reduce,
    subresultant,
    two_poly_subresultant,
    verify_identity,
)

__all__ = [
    "det",
    "dp",
    "dp_linear_combination",
    "generate_system",
    "habicht_params",
    "ideal_decompose",
    "index_set",
    "pcdp",
    "reduce",
    "subresultant",
    "two_poly_subresultant",
    "verify_identity",
]
