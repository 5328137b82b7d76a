"""Truth tables, digit and block decompositions, decimation."""

import numpy as np
import pytest

from src.functions.gbf import (
    GBF,
    DomainKind,
    base2t_blocks,
    component_base2t,
    component_gc,
    components_base2t,
    components_gc,
    decimate,
    digits,
    inverse_exponent,
    random_gbf,
    recompose_blocks,
    recompose_digits,
    shift_msb,
    split_low_high,
    value_distribution,
)
from src.errors import InvariantViolation


def test_bit_order():
    f = GBF.from_callable(2, 1, lambda b: b[0] * b[1])
    assert f.table.tolist() == [0, 0, 0, 1]
    g = GBF.from_callable(2, 1, lambda b: b[0])
    assert g.table.tolist() == [0, 1, 0, 1]


def test_validation():
    with pytest.raises(InvariantViolation):
        GBF(2, 1, [0, 1, 0])
    with pytest.raises(InvariantViolation):
        GBF(2, 2, [0, 1, 2, 4])
    with pytest.raises(InvariantViolation):
        GBF(2, 1, [0, 1, 1, 0], DomainKind.FIELD)
    with pytest.raises(InvariantViolation):
        GBF(2, 0, [0, 0, 0, 0])


def test_field_degree_must_match(gf16):
    with pytest.raises(InvariantViolation):
        GBF(3, 1, [0] * 8, DomainKind.FIELD, gf16)


def test_table_is_read_only():
    f = GBF.zero(2, 2)
    with pytest.raises(ValueError):
        f.table[0] = 1


def test_from_table_and_boolean():
    f = GBF.from_table([0, 3, 1, 2, 0, 0, 1, 1], 2)
    assert (f.n, f.k) == (3, 2)
    assert GBF.from_boolean([0, 1, 1, 0]).is_boolean
    with pytest.raises(InvariantViolation):
        GBF.from_table([0, 1, 0], 1)


def test_equality_includes_domain(gf16):
    f = GBF.constant(4, 2, 3)
    assert f == GBF(4, 2, [3] * 16)
    assert f != f.to_field(gf16)
    assert f.to_field(gf16).to_vector() == f


def test_digits_recompose(rng):
    f = random_gbf(4, 3, rng)
    parts = digits(f)
    assert len(parts) == 3 and all(p.is_boolean for p in parts)
    assert recompose_digits(parts) == f


def test_component_matches_xor(rng):
    f = random_gbf(4, 3, rng)
    a1, a2, a3 = (d.table for d in digits(f))
    assert component_gc(f, (1, 0)).table.tolist() == (a1 ^ a3).tolist()
    assert component_gc(f, (1, 1)).table.tolist() == (a1 ^ a2 ^ a3).tolist()


def test_components_order(rng):
    f = random_gbf(3, 3, rng)
    parts = components_gc(f)
    assert [c for c, _ in parts] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert parts[0][1] == digits(f)[2]
    assert components_gc(GBF.zero(2, 1))[0][0] == ()


def test_base2t_components(rng):
    f = random_gbf(3, 4, rng)
    b1, b2 = (b.table for b in base2t_blocks(f, 2))
    assert component_base2t(f, 2, (3,)).table.tolist() == ((3 * b1 + b2) % 4).tolist()
    assert recompose_blocks(base2t_blocks(f, 2), 2) == f
    assert len(components_base2t(f, 2)) == 4
    with pytest.raises(InvariantViolation):
        base2t_blocks(f, 3)


def test_split_low_high(rng):
    f = random_gbf(3, 4, rng)
    g, h = split_low_high(f, 1)
    assert (g.k, h.k) == (1, 3)
    assert (g.table + 2 * h.table).tolist() == f.table.tolist()


def test_level_embedding():
    f = GBF(2, 2, [0, 1, 2, 3])
    assert f.at_level(4).table.tolist() == [0, 4, 8, 12]


def test_shift_msb_and_distribution():
    f = GBF.from_callable(2, 2, lambda b: 2 * b[0] * b[1])
    assert shift_msb(f, 3).table.tolist() == [0, 2, 2, 2]
    dist = value_distribution(f, 0)
    assert dist.counts.tolist() == [3, 0, 1, 0]
    assert dist.total == 4


def test_decimation_inverts(gf16, rng):
    f = random_gbf(4, 3, rng, DomainKind.FIELD, gf16)
    j = inverse_exponent(7, 4)
    assert j == 13
    assert decimate(decimate(f, 7), j) == f
    assert decimate(f, 1) == f
    with pytest.raises(InvariantViolation):
        decimate(f, 5)
    with pytest.raises(InvariantViolation):
        decimate(f.to_vector(), 7)


def test_decimation_values(gf16):
    f = GBF(4, 4, np.arange(16), DomainKind.FIELD, gf16)
    g = decimate(f, 2)
    assert g(2) == gf16.power(2, 2)
    assert g(0) == 0


@pytest.mark.parametrize("domain", [DomainKind.VECTOR, DomainKind.FIELD])
def test_shift_msb_only_moves_the_top_digit(rng, gf16, domain):
    f = random_gbf(4, 3, rng, domain, gf16 if domain is DomainKind.FIELD else None)
    for u in range(16):
        shifted = digits(shift_msb(f, u))
        assert shifted[:-1] == digits(f)[:-1]
        assert shifted[-1] == shift_msb(digits(f)[-1], u)


def test_base2t_components_at_width_one_are_gc(rng):
    f = random_gbf(3, 4, rng)
    for c, g in components_gc(f):
        assert component_base2t(f, 1, c) == g
