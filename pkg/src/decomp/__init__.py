"""Verifiers for the digit and component decomposition theorems."""

from .theorems import (
    THEOREMS,
    THEOREM_ALIASES,
    Clause,
    DecompositionReport,
    extract_signs,
    reassemble_from_split,
    recursive_component,
    split_pair,
    verify_base2t_theorem,
    verify_component_hyperbent_theorem,
    verify_component_semibent_theorem,
    verify_component_theorem,
    verify_recursive_gc,
    verify_split_k_km1,
    verify_t_split,
    verify_theorem,
)

__all__ = [
    "THEOREMS",
    "THEOREM_ALIASES",
    "Clause",
    "DecompositionReport",
    "extract_signs",
    "reassemble_from_split",
    "recursive_component",
    "split_pair",
    "verify_base2t_theorem",
    "verify_component_hyperbent_theorem",
    "verify_component_semibent_theorem",
    "verify_component_theorem",
    "verify_recursive_gc",
    "verify_split_k_km1",
    "verify_t_split",
    "verify_theorem",
]
