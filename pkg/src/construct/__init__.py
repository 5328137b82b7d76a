"""Coset-constant g-hyperbent families on GF(2^n)."""

from .families import (
    CosetUSpec,
    PsApSpec,
    check_coset_u_criterion,
    construct_coset_u,
    construct_ps_ap,
    coset_u_sum,
    perturb_coset_u,
    ps_ap_dual,
    sample_coset_u_values,
    sample_ps_ap_g,
)

__all__ = [
    "CosetUSpec",
    "PsApSpec",
    "check_coset_u_criterion",
    "construct_coset_u",
    "construct_ps_ap",
    "coset_u_sum",
    "perturb_coset_u",
    "ps_ap_dual",
    "sample_coset_u_values",
    "sample_ps_ap_g",
]
