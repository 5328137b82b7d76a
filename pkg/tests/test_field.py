"""GF(2^n) arithmetic, traces and the subgroup helpers."""

import pytest

from src.algebra.bits import parity_int
from src.algebra.field import FieldCtx, field_for_degree, get_field, is_irreducible
from src.errors import InvariantViolation


def test_irreducibility():
    assert is_irreducible(0x13)
    assert is_irreducible(0x11B)
    assert not is_irreducible(0x15)  # (x^2 + x + 1)^2
    assert not is_irreducible(0x12)  # divisible by x


def test_reducible_modulus_rejected():
    with pytest.raises(InvariantViolation):
        FieldCtx(4, 0x15)


def test_generator_and_products(gf16):
    g = gf16.generator
    assert g == 2
    assert gf16.mul(2, 8) == 3  # x^4 = x + 1
    assert gf16.mul(g, gf16.power(g, 14)) == 1
    assert gf16.power(g, 15) == 1


def test_inverses(gf16):
    for a in range(1, 16):
        assert gf16.mul(a, gf16.inv(a)) == 1
    with pytest.raises(InvariantViolation):
        gf16.inv(0)


def test_trace_on_gf4(gf4):
    assert gf4.trace(2) == 1
    assert gf4.trace(1) == 0


def test_trace_is_balanced(gf16):
    assert list(gf16.trace_table) == [gf16.trace(a) for a in range(16)]
    assert int(gf16.trace_table.sum()) == 8


def test_inner_product_map(gf16):
    tau = gf16.inner_product_map
    assert sorted(tau.tolist()) == list(range(16))
    for u in range(16):
        for x in range(16):
            assert parity_int(int(tau[u]) & x) == gf16.trace(gf16.mul(u, x))


def test_subfield_and_relative_trace(gf16):
    sub = gf16.subfield_elements(2)
    assert sub[:2] == [0, 1]
    assert len(sub) == 4 and sub == sorted(sub)
    assert all(gf16.is_in_subfield(2, a) for a in sub)
    for a in range(16):
        assert gf16.rel_trace(2, a) in sub


def test_coset_decomposition_covers_group(gf16):
    subfield_star, units = gf16.coset_decompose()
    assert len(subfield_star) == 3 and len(units) == 5
    products = {gf16.mul(s, u) for s in subfield_star for u in units}
    assert products == set(range(1, 16))


def test_coprime_exponents(gf16):
    assert gf16.coprime_exponents() == [1, 2, 4, 7, 8, 11, 13, 14]
    assert gf16.inverse_exponent(7) == 13
    with pytest.raises(InvariantViolation):
        gf16.inverse_exponent(3)


def test_power_table(gf16):
    table = gf16.power_table(7)
    assert table[0] == 0
    assert sorted(table.tolist()) == list(range(16))
    assert table[2] == gf16.power(2, 7)


def test_large_field_without_tables():
    ctx = FieldCtx(17)
    a = 0x1ABCD
    assert ctx.mul(a, ctx.inv(a)) == 1


def test_field_cache_and_overrides():
    assert get_field(4) is get_field(4, 0x13)
    config = {"field": {"moduli": {4: "0x19"}}}
    assert field_for_degree(4, config).modulus == 0x19
    assert field_for_degree(4, {"field": {"moduli": {}}}).modulus == 0x13


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_field_axioms_on_random_triples(rng, n):
    ctx = get_field(n)
    for a, b, c in rng.integers(0, 1 << n, size=(50, 3)).tolist():
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, b ^ c) == ctx.mul(a, b) ^ ctx.mul(a, c)
        assert ctx.mul(a, 1) == a
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_trace_is_linear(rng, n):
    ctx = get_field(n)
    for a, b in rng.integers(0, 1 << n, size=(50, 2)).tolist():
        assert ctx.trace(a ^ b) == ctx.trace(a) ^ ctx.trace(b)
        assert ctx.trace(ctx.mul(a, a)) == ctx.trace(a)


@pytest.mark.parametrize("n", [2, 4, 6])
def test_half_subfield_is_trace_orthogonal(n):
    ctx = get_field(n)
    sub = ctx.subfield_elements(n // 2)
    assert all(ctx.trace(ctx.mul(a, b)) == 0 for a in sub for b in sub)


@pytest.mark.parametrize("n", [2, 6])
def test_coset_decomposition_other_degrees(n):
    ctx = get_field(n)
    m = n // 2
    subfield_star, units = ctx.coset_decompose()
    assert len(subfield_star) == (1 << m) - 1 and len(units) == (1 << m) + 1
    products = [ctx.mul(s, u) for s in subfield_star for u in units]
    assert sorted(products) == list(range(1, 1 << n))
