"""Bit-level helpers shared by the field and truth-table code."""

import numpy as np


def parity(x: np.ndarray) -> np.ndarray:
    """Parity of the popcount of each entry (entries < 2^32)."""
    x = np.asarray(x, dtype=np.int64).copy()
    for shift in (16, 8, 4, 2, 1):
        x ^= x >> shift
    return x & 1


def parity_int(x: int) -> int:
    return bin(x).count("1") & 1

