"""Transform paths, identities and inversion."""

import numpy as np
import pytest

from src.algebra.cyclo import CycloInt, zeta_pow
from src.algebra.field import get_field
from src.errors import InvariantViolation
from src.functions.gbf import GBF, DomainKind, components_gc, random_gbf
from src.spectral.transforms import (
    check_int64_range,
    combine_component_spectra,
    ewht,
    fwht_columns,
    gwht,
    gwht_base2t,
    gwht_direct,
    gwht_fast_components,
    inverse_gwht,
    parseval_ok,
    vandermonde_weight,
    wht_fast,
)


def test_bent_walsh_values(bent4):
    walsh = wht_fast(bent4).coords[:, 0]
    assert np.all(np.abs(walsh) == 4)


def test_semibent_walsh_values():
    f = GBF.from_callable(3, 1, lambda b: b[0] * b[1] + b[2])
    walsh = wht_fast(f).coords[:, 0]
    assert set(walsh.tolist()) <= {0, 4, -4}


def test_quaternary_spectrum(quaternary_bent):
    spectrum = gwht(quaternary_bent)
    assert spectrum.coords.tolist() == [[2, 0], [2, 0], [2, 0], [-2, 0]]


def test_gbent_n3k3_spectrum(gbent_n3k3):
    spectrum = gwht_direct(gbent_n3k3)
    # H(0) = (1 + i) * 2 at level 3, i = zeta^2
    assert spectrum[0] == CycloInt(3, (2, 0, 2, 0))


@pytest.mark.parametrize("domain", [DomainKind.VECTOR, DomainKind.FIELD])
def test_component_path_matches_direct(rng, domain):
    for n in range(1, 6):
        field = get_field(n)
        for k in range(1, 5):
            for _ in range(3):
                f = random_gbf(n, k, rng, domain, field)
                assert gwht_fast_components(f) == gwht_direct(f)


def test_threads_do_not_change_the_result(rng):
    f = random_gbf(6, 3, rng)
    assert gwht_fast_components(f, threads=4) == gwht_fast_components(f)
    assert gwht_direct(f, threads=3) == gwht_direct(f)


def test_base2t_path(rng):
    f = random_gbf(4, 4, rng)
    assert gwht_base2t(f, 2) == gwht_direct(f)
    assert gwht_base2t(f, 4) == gwht_direct(f)


def test_combine_component_spectra(rng):
    f = random_gbf(3, 3, rng)
    spectra = [wht_fast(g) for _, g in components_gc(f)]
    assert combine_component_spectra(spectra, 3) == gwht_direct(f)
    with pytest.raises(InvariantViolation):
        combine_component_spectra(spectra[:3], 3)


def test_weight_at_t1():
    # B_c = prod_j (1 + (-1)^c_j zeta^(2^j))
    one = CycloInt.one(3)
    expected = (one - zeta_pow(3, 1)) * (one + zeta_pow(3, 2))
    assert vandermonde_weight((1, 0), 1, 3) == expected


def test_parseval_and_inverse(rng, gf16):
    for domain in (DomainKind.VECTOR, DomainKind.FIELD):
        f = random_gbf(4, 3, rng, domain, gf16)
        spectrum = gwht(f)
        assert parseval_ok(spectrum)
        assert inverse_gwht(spectrum) == f


def test_extended_transform(rng, gf16):
    f = random_gbf(4, 2, rng, DomainKind.FIELD, gf16)
    assert ewht(f, 1) == gwht(f)
    assert parseval_ok(ewht(f, 7))
    with pytest.raises(InvariantViolation):
        ewht(f.to_vector(), 1)


def test_butterfly_needs_power_of_two():
    with pytest.raises(InvariantViolation):
        fwht_columns(np.ones(6, dtype=np.int64))


def test_wht_needs_boolean(quaternary_bent):
    with pytest.raises(InvariantViolation):
        wht_fast(quaternary_bent)


def test_check_paths_passes(rng):
    f = random_gbf(3, 3, rng)
    assert gwht(f, check_paths=True) == gwht_direct(f)


def test_spectrum_json(quaternary_bent):
    data = gwht(quaternary_bent).to_json()
    assert data["n"] == 2 and data["k"] == 2
    assert data["values"][3]["coords"] == [-2, 0]
    assert data["values"][3]["complex"] == pytest.approx([-2.0, 0.0])


def test_linear_change_of_variables_permutes_walsh_values(rng, gf16):
    for a in (2, 7, 13):
        perm = np.array([gf16.mul(a, x) for x in range(16)])
        for _ in range(5):
            f = random_gbf(4, 1, rng)
            g = GBF(4, 1, f.table[perm])
            assert sorted(wht_fast(g).coords[:, 0].tolist()) == sorted(wht_fast(f).coords[:, 0].tolist())


@pytest.mark.parametrize("n, k", [(24, 10), (30, 2), (14, 16)])
def test_int64_range(n, k):
    check_int64_range(n, k)


@pytest.mark.parametrize("n, k", [(31, 2), (25, 14), (20, 24)])
def test_int64_range_rejects(n, k):
    with pytest.raises(InvariantViolation):
        check_int64_range(n, k)
