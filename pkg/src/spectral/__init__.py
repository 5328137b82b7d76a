"""Exact Walsh-Hadamard transforms over Z[zeta_{2^k}]."""

from .transforms import (
    Spectrum,
    combine_base2t_spectra,
    combine_component_spectra,
    check_int64_range,
    distribution_matrix,
    ewht,
    fwht_columns,
    gwht,
    gwht_base2t,
    gwht_direct,
    gwht_fast_components,
    inverse_gwht,
    parseval_ok,
    vandermonde_h,
    vandermonde_weight,
    wht,
    wht_fast,
)

__all__ = [
    "Spectrum",
    "combine_base2t_spectra",
    "combine_component_spectra",
    "check_int64_range",
    "distribution_matrix",
    "ewht",
    "fwht_columns",
    "gwht",
    "gwht_base2t",
    "gwht_direct",
    "gwht_fast_components",
    "inverse_gwht",
    "parseval_ok",
    "vandermonde_h",
    "vandermonde_weight",
    "wht",
    "wht_fast",
]
