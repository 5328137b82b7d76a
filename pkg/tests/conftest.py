"""Shared fixtures: small fields and hand-checked functions."""

import numpy as np
import pytest

from src.algebra.field import get_field
from src.config import THREADS_ENV
from src.construct.families import PsApSpec, construct_ps_ap, sample_ps_ap_g
from src.functions.gbf import GBF


@pytest.fixture(autouse=True)
def _no_thread_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def gf4():
    return get_field(2, 0x7)


@pytest.fixture
def gf16():
    return get_field(4, 0x13)


@pytest.fixture
def bent4():
    """x1 x2 + x3 x4 on V_4."""
    return GBF.from_callable(4, 1, lambda b: b[0] * b[1] + b[2] * b[3])


@pytest.fixture
def quaternary_bent():
    """2 x1 x2 on V_2 at k = 2; spectrum (2, 2, 2, -2)."""
    return GBF.from_callable(2, 2, lambda b: 2 * b[0] * b[1])


@pytest.fixture
def gbent_n3k3():
    """2 x1 + 4 x2 x3; H(u) = (1 +- i)(+-2), regular two-term form."""
    return GBF.from_callable(3, 3, lambda b: 2 * b[0] + 4 * b[1] * b[2])


@pytest.fixture
def gbent_n3k2():
    """x1 + 2 x2 x3; H(u) = 2(+-1 +- i), the exceptional form."""
    return GBF.from_callable(3, 2, lambda b: b[0] + 2 * b[1] * b[2])


@pytest.fixture
def ps_ap_spec():
    return PsApSpec(2, 3, sample_ps_ap_g(2, 3, seed=5))


@pytest.fixture
def ps_ap_k3(ps_ap_spec, gf16):
    return construct_ps_ap(ps_ap_spec, gf16)
