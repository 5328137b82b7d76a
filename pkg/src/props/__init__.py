"""Decision procedures for (generalized) bent, semibent and hyperbent functions."""

from .checkers import (
    PROPERTY_CHECKS,
    check_gbent_by_counts_even,
    check_gbent_by_counts_odd,
    check_property,
    counts_criterion_mask,
    dual,
    dual_from_counts,
    is_bent,
    is_gbent,
    is_ghyperbent,
    is_hyperbent,
    is_regular,
    is_semibent,
    regular_exponents,
    walsh_support,
)
from .reports import PropertyReport

__all__ = [
    "PROPERTY_CHECKS",
    "PropertyReport",
    "check_gbent_by_counts_even",
    "check_gbent_by_counts_odd",
    "check_property",
    "counts_criterion_mask",
    "dual",
    "dual_from_counts",
    "is_bent",
    "is_gbent",
    "is_ghyperbent",
    "is_hyperbent",
    "is_regular",
    "is_semibent",
    "regular_exponents",
    "walsh_support",
]
