"""Decomposition verifiers on functions with known structure."""

import numpy as np
import pytest

from src.algebra.field import get_field
from src.construct.families import PsApSpec, construct_ps_ap, sample_ps_ap_g
from src.decomp.theorems import (
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
from src.errors import BudgetExceeded, HypothesisError, SignUndefined
from src.functions.gbf import GBF, random_gbf
from src.spectral.transforms import Spectrum, gwht


@pytest.fixture
def ps_ap_k4(gf16):
    return construct_ps_ap(PsApSpec(2, 4, sample_ps_ap_g(2, 4, seed=9)), gf16)


def _claims(report):
    return {c.claim: c.verdict for c in report.clauses}


def test_components_of_quaternary_bent(quaternary_bent):
    report = verify_component_hyperbent_theorem(quaternary_bent)
    assert report.theorem == "prop2i"
    assert report.holds
    assert all(_claims(report).values())


def test_components_of_ps_ap(ps_ap_k3):
    report = verify_component_theorem(ps_ap_k3)
    assert report.theorem == "thm7"
    assert report.holds and report.clauses[0].verdict
    assert len(report.clauses) == 1 + 4 + 1


def test_semibent_components(gbent_n3k3):
    report = verify_component_semibent_theorem(gbent_n3k3)
    assert report.holds
    assert all(_claims(report).values())
    with pytest.raises(HypothesisError):
        verify_component_semibent_theorem(GBF.zero(2, 2))


def test_hypothesis_failure_is_data():
    f = GBF.from_callable(3, 3, lambda b: b[0])
    report = verify_component_semibent_theorem(f)
    assert not report.clauses[0].verdict
    assert report.holds


def test_reassembly_identity_holds_for_any_function(rng):
    f = random_gbf(3, 3, rng)
    _, h, h2 = split_pair(f)
    assert reassemble_from_split(gwht(h), gwht(h2)) == gwht(f)


def test_split_on_gbent(gbent_n3k3):
    report = verify_split_k_km1(gbent_n3k3, "iff")
    assert report.holds
    assert all(_claims(report).values())
    assert set(report.sign_pattern) <= {-1, 1}


def test_split_on_non_gbent():
    f = GBF.from_callable(4, 3, lambda b: b[0])
    report = verify_split_k_km1(f, "iff")
    assert not report.clauses[0].verdict
    assert report.holds


def test_split_hypotheses(gbent_n3k2):
    with pytest.raises(HypothesisError):
        verify_split_k_km1(GBF.zero(2, 1))
    with pytest.raises(HypothesisError):
        verify_split_k_km1(gbent_n3k2, "iff")
    report = verify_split_k_km1(gbent_n3k2, "check")
    assert report.holds


def test_t_split(ps_ap_k4):
    report = verify_t_split(ps_ap_k4, 2)
    assert report.holds and report.clauses[0].verdict
    with pytest.raises(HypothesisError):
        verify_t_split(ps_ap_k4, 3)


def test_t_split_odd_n():
    # twice 2 x1 + 4 x2 x3 is gbent at level 2^4; h = x1 + 2 x2 x3
    f = GBF.from_callable(3, 4, lambda b: 4 * b[0] + 8 * b[1] * b[2])
    report = verify_t_split(f, 2)
    assert report.theorem == "prop6"
    assert report.clauses[0].verdict
    assert all(_claims(report).values())


def test_component_converse_fails_beyond_level_four():
    # all four components are bent, yet f is not gbent
    f = GBF(2, 3, [0, 1, 2, 7])
    report = verify_component_hyperbent_theorem(f)
    assert not report.clauses[0].verdict
    assert all(c.verdict for c in report.clauses[1:-1])
    converse = report.clauses[-1]
    assert not converse.verdict and not converse.required
    assert report.holds


def test_recursive_component_endpoints(rng):
    f = random_gbf(3, 3, rng)
    assert recursive_component(f, 1, ()) == f
    top = recursive_component(f, 3, (1, 0))
    assert top.k == 1
    assert top.table.tolist() == ((f.table & 1) ^ (f.table >> 2)).tolist()


def test_recursive_on_quaternary_bent(quaternary_bent):
    reports = verify_theorem(quaternary_bent, "recursive", s=2)
    assert len(reports) == 2
    assert all(r.holds and r.clauses[0].verdict for r in reports)
    assert verify_recursive_gc(quaternary_bent, 2, (1,)).holds
    with pytest.raises(HypothesisError):
        verify_theorem(quaternary_bent, "recursive")


def test_base2t(ps_ap_k4):
    report = verify_base2t_theorem(ps_ap_k4, 2)
    assert report.holds
    assert all(_claims(report).values())
    assert len(report.clauses) == 1 + 4 + 1


def test_base2t_limits(ps_ap_k4, gbent_n3k3):
    with pytest.raises(BudgetExceeded):
        verify_base2t_theorem(ps_ap_k4, 2, max_components=1)
    with pytest.raises(HypothesisError):
        verify_base2t_theorem(ps_ap_k4, 3)
    with pytest.raises(HypothesisError):
        verify_base2t_theorem(gbent_n3k3, 1)


def test_extract_signs():
    h = Spectrum(1, 1, np.array([[2], [-2]]))
    assert extract_signs(h, Spectrum(1, 1, np.array([[2], [2]]))).tolist() == [1, -1]
    assert extract_signs(h, Spectrum(1, 1, np.array([[0], [2]]))).tolist() == [0, -1]
    with pytest.raises(SignUndefined):
        extract_signs(Spectrum(1, 1, np.array([[0], [2]])), h)


def test_dispatch(gbent_n3k3):
    assert verify_theorem(gbent_n3k3, "thm4")[0].theorem == "thm4"
    assert verify_theorem(gbent_n3k3, "cor1")[0].theorem == "cor1"
    assert verify_theorem(gbent_n3k3, "prop2")[0].theorem == "prop2ii"
    assert verify_theorem(gbent_n3k3.to_field(get_field(3)), "thm8")[0].theorem == "thm8"
    with pytest.raises(HypothesisError):
        verify_theorem(gbent_n3k3, "thm7")
    with pytest.raises(HypothesisError):
        verify_theorem(gbent_n3k3, "nonexistent")


@pytest.mark.parametrize(
    "alias, theorem", [("components", "prop2ii"), ("split", "thm4"), ("split-iff", "cor1"), ("t-split", "prop6")]
)
def test_aliases(gbent_n3k3, alias, theorem):
    assert verify_theorem(gbent_n3k3, alias)[0].theorem == theorem


def test_report_dict(gbent_n3k3):
    data = verify_split_k_km1(gbent_n3k3).to_dict()
    assert data["holds"] is True
    assert data["theorem"] == "thm4"
    assert {"claim", "verdict", "witness", "required"} <= set(data["clauses"][0])
