"""Builders for the two coset-constant g-hyperbent families.

Both families live on GF(2^n), n = 2m, and are constant on the cosets
a * GF(2^m)* of the subfield's multiplicative group:

- PS_ap: x = y' + w y with y', y in GF(2^m) and w the field generator;
  f(x) = g(y'/y), with y'/y := 0 when y = 0.
- coset-U: f(s u) = value(u) for s in GF(2^m)*, u in the order 2^m + 1
  subgroup U, and f(0) = f0.

Subfield elements are labelled by rank in ascending integer order (so
g_table[0] is g(0) and g_table[1] is g(1)); U is labelled by
U[t] = gamma^((2^m - 1) t).
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.algebra.cyclo import CycloInt, zeta_pow, zeta_sum
from src.algebra.field import FieldCtx, field_for_degree
from src.errors import BudgetExceeded, InvariantViolation
from src.functions.gbf import GBF, DomainKind


@dataclass(frozen=True)
class PsApSpec:
    half_n: int
    k: int
    g_table: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2 * self.half_n

    def g_sum(self) -> CycloInt:
        """sum_t zeta^g(t) over the subfield."""
        return zeta_sum(self.k, self.g_table)

    def validate(self):
        size = 1 << self.half_n
        if self.half_n < 1:
            raise InvariantViolation(f"PS_ap needs m >= 1, got m={self.half_n}")
        if len(self.g_table) != size:
            raise InvariantViolation(f"g_table must have 2^m = {size} entries, got {len(self.g_table)}")
        if any(not 0 <= v < (1 << self.k) for v in self.g_table):
            raise InvariantViolation(f"g_table values must lie in [0, 2^k) = [0, {1 << self.k})")
        if self.g_table[0] != 0:
            raise InvariantViolation(f"g(0) must be 0, got {self.g_table[0]}")
        if not self.g_sum().is_zero():
            raise InvariantViolation(f"sum_t zeta^g(t) must vanish, got {self.g_sum()}")


@dataclass(frozen=True)
class CosetUSpec:
    n: int
    k: int
    f0: int
    u_values: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.n // 2

    def validate(self):
        if self.n < 2 or self.n % 2:
            raise InvariantViolation(f"coset-U functions need even n >= 2, got n={self.n}")
        if self.k < 3:
            raise InvariantViolation(f"coset-U construction is stated for k >= 3, got k={self.k}")
        expected = (1 << self.m) + 1
        if len(self.u_values) != expected:
            raise InvariantViolation(f"u_values must have 2^m + 1 = {expected} entries, got {len(self.u_values)}")
        if any(not 0 <= v < (1 << self.k) for v in (self.f0, *self.u_values)):
            raise InvariantViolation(f"values must lie in [0, 2^k) = [0, {1 << self.k})")


def _field(n: int, ctx: Optional[FieldCtx]) -> FieldCtx:
    ctx = ctx if ctx is not None else field_for_degree(n)
    if ctx.n != n:
        raise InvariantViolation(f"construction needs GF(2^{n}), got GF(2^{ctx.n})")
    return ctx


def _subfield_rank(ctx: FieldCtx, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Sorted subfield elements and the element -> rank lookup (-1 outside)."""
    elements = np.array(ctx.subfield_elements(m), dtype=np.int64)
    rank = np.full(ctx.size, -1, dtype=np.int64)
    rank[elements] = np.arange(elements.size)
    return elements, rank


def _ps_ap_table(spec: PsApSpec, ctx: FieldCtx, offset: int) -> np.ndarray:
    """f(y' + w y) = g(y'/y + offset) on y != 0, and 0 on the subfield."""
    m = spec.half_n
    elements, rank = _subfield_rank(ctx, m)
    g = np.array(spec.g_table, dtype=np.int64)
    nonzero = elements[1:]
    inverses = np.array([ctx.power(int(y), (1 << m) - 2) for y in nonzero], dtype=np.int64)
    points = elements[:, None] ^ ctx.mul_array(ctx.generator, nonzero)[None, :]
    ratios = ctx.mul_array(elements[:, None], inverses[None, :]) ^ offset
    table = np.zeros(ctx.size, dtype=np.int64)
    table[points] = g[rank[ratios]]
    return table


def construct_ps_ap(spec: PsApSpec, ctx: Optional[FieldCtx] = None) -> GBF:
    """Generalized PS_ap function on GF(2^(2m)); gbent and g-hyperbent when the spec is valid."""
    spec.validate()
    ctx = _field(spec.n, ctx)
    return GBF(spec.n, spec.k, _ps_ap_table(spec, ctx, 0), DomainKind.FIELD, ctx)


def ps_ap_dual(spec: PsApSpec, ctx: Optional[FieldCtx] = None) -> GBF:
    """Dual of construct_ps_ap(spec) under Tr(ux): g(y'/y + Tr_m(w)), equal to f(x^-1)."""
    spec.validate()
    ctx = _field(spec.n, ctx)
    shift = ctx.rel_trace(spec.half_n, ctx.generator)
    return GBF(spec.n, spec.k, _ps_ap_table(spec, ctx, shift), DomainKind.FIELD, ctx)


def construct_coset_u(spec: CosetUSpec, ctx: Optional[FieldCtx] = None) -> GBF:
    """f(0) = f0 and f(s U[t]) = u_values[t] for s in GF(2^m)*."""
    spec.validate()
    ctx = _field(spec.n, ctx)
    subfield_star, units = ctx.coset_decompose()
    points = ctx.mul_array(np.array(subfield_star)[None, :], np.array(units)[:, None])
    table = np.zeros(ctx.size, dtype=np.int64)
    table[0] = spec.f0
    table[points] = np.array(spec.u_values, dtype=np.int64)[:, None]
    return GBF(spec.n, spec.k, table, DomainKind.FIELD, ctx)


def coset_u_sum(spec: CosetUSpec) -> CycloInt:
    """sum_{u in U} zeta^f(u)."""
    return zeta_sum(spec.k, spec.u_values)


def check_coset_u_criterion(spec: CosetUSpec) -> bool:
    """g-hyperbent criterion: sum_{u in U} zeta^f(u) = zeta^f(0)."""
    spec.validate()
    return coset_u_sum(spec) == zeta_pow(spec.k, spec.f0)


# --- samplers -------------------------------------------------------------------

def _antipodal_pairs(rng: np.random.Generator, slots: np.ndarray, k: int, out: np.ndarray):
    """Fill slots (even count) with random pairs (v, v + 2^(k-1))."""
    half = 1 << (k - 1)
    slots = rng.permutation(slots)
    for a, b in zip(slots[0::2], slots[1::2]):
        v = int(rng.integers(0, 1 << k))
        out[a], out[b] = v, (v + half) % (1 << k)


def sample_ps_ap_g(
    m: int,
    k: int,
    seed: Optional[int] = None,
    mode: str = "pairs",
    tries: int = 100_000,
) -> tuple[int, ...]:
    """Random admissible g: g(0) = 0 and sum_t zeta^g(t) = 0.

    mode="pairs" places 2^(k-1) at one t0 != 0 (cancelling zeta^g(0) = 1) and
    antipodal pairs elsewhere; mode="rejection" draws arbitrary tables until
    the sum vanishes.
    """
    if m < 1:
        raise InvariantViolation(f"PS_ap needs m >= 1, got m={m}")
    size = 1 << m
    rng = np.random.default_rng(seed)
    if mode == "pairs":
        g = np.zeros(size, dtype=np.int64)
        t0 = int(rng.integers(1, size))
        g[t0] = 1 << (k - 1)
        rest = np.array([t for t in range(1, size) if t != t0], dtype=np.int64)
        _antipodal_pairs(rng, rest, k, g)
        return tuple(int(v) for v in g)
    if mode == "rejection":
        for _ in range(tries):
            g = np.concatenate([[0], rng.integers(0, 1 << k, size=size - 1)])
            if zeta_sum(k, g).is_zero():
                return tuple(int(v) for v in g)
        raise BudgetExceeded(f"no admissible g found in {tries} draws (m={m}, k={k})")
    raise InvariantViolation(f"unknown sampling mode '{mode}' (pairs | rejection)")


def sample_coset_u_values(m: int, k: int, seed: Optional[int] = None, f0: Optional[int] = None) -> CosetUSpec:
    """Random spec meeting the criterion: one u with value f0, antipodal pairs on the rest."""
    if k < 3:
        raise InvariantViolation(f"coset-U construction is stated for k >= 3, got k={k}")
    rng = np.random.default_rng(seed)
    f0 = int(rng.integers(0, 1 << k)) if f0 is None else f0 % (1 << k)
    size = (1 << m) + 1
    values = np.zeros(size, dtype=np.int64)
    pinned = int(rng.integers(0, size))
    values[pinned] = f0
    _antipodal_pairs(rng, np.array([t for t in range(size) if t != pinned], dtype=np.int64), k, values)
    return CosetUSpec(n=2 * m, k=k, f0=f0, u_values=tuple(int(v) for v in values))


def perturb_coset_u(spec: CosetUSpec, seed: Optional[int] = None) -> CosetUSpec:
    """Change a single u-value so that the criterion fails."""
    rng = np.random.default_rng(seed)
    for index in rng.permutation(len(spec.u_values)):
        values = list(spec.u_values)
        values[index] = (values[index] + 1) % (1 << spec.k)
        candidate = CosetUSpec(spec.n, spec.k, spec.f0, tuple(values))
        if not check_coset_u_criterion(candidate):
            return candidate
    raise InvariantViolation("no single-value perturbation breaks the criterion")
