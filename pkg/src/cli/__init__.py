"""Command-line surface: spectrum, check, construct, decompose, search, bench."""

from .commands import RunConfig, build_run_config
from .search import SearchResult, batch_spectra, batch_verdicts, iter_table_chunks, run_search

__all__ = [
    "RunConfig",
    "SearchResult",
    "batch_spectra",
    "batch_verdicts",
    "build_run_config",
    "iter_table_chunks",
    "run_search",
]
