"""Exact algebra: GF(2^n) arithmetic and cyclotomic integers Z[zeta_{2^k}]."""

from .cyclo import CycloInt, sqrt2, zeta_matrix, zeta_pow, zeta_sum
from .field import FieldCtx, field_for_degree, get_field, is_irreducible

__all__ = [
    "CycloInt",
    "FieldCtx",
    "field_for_degree",
    "get_field",
    "is_irreducible",
    "sqrt2",
    "zeta_matrix",
    "zeta_pow",
    "zeta_sum",
]
