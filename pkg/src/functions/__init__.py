"""Generalized Boolean functions, their decompositions and file formats."""

from .formats import gbf_from_json, gbf_from_text, gbf_to_dict, gbf_to_json, gbf_to_text, load_gbf, save_gbf
from .gbf import (
    GBF,
    DomainKind,
    ValueDistribution,
    base2t_blocks,
    component_base2t,
    component_gc,
    components_base2t,
    components_gc,
    decimate,
    digits,
    inner_product_row,
    inverse_exponent,
    random_gbf,
    recompose_blocks,
    recompose_digits,
    shift_msb,
    split_low_high,
    value_distribution,
)

__all__ = [
    "GBF",
    "DomainKind",
    "ValueDistribution",
    "base2t_blocks",
    "component_base2t",
    "component_gc",
    "components_base2t",
    "components_gc",
    "decimate",
    "digits",
    "gbf_from_json",
    "gbf_from_text",
    "gbf_to_dict",
    "gbf_to_json",
    "gbf_to_text",
    "inner_product_row",
    "inverse_exponent",
    "load_gbf",
    "random_gbf",
    "recompose_blocks",
    "recompose_digits",
    "save_gbf",
    "shift_msb",
    "split_low_high",
    "value_distribution",
]
