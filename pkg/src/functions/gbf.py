"""Generalized Boolean functions f: V_n -> Z_{2^k} as dense truth tables.

Domain points are n-bit integers. Index bit i holds x_{i+1}, so on the
vector domain x_1 x_2 is 1 exactly at index 3 when n = 2. On the field
domain the same integers are GF(2^n) elements in the polynomial basis
and the inner product is Tr(ux) instead of the dot product.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Callable, Optional, Sequence

import numpy as np

from src.algebra.bits import parity
from src.algebra.cyclo import MAX_LEVEL
from src.algebra.field import MAX_DEGREE, FieldCtx
from src.errors import InvariantViolation


class DomainKind(Enum):
    """Which inner product the domain carries."""
    VECTOR = "vector"  # u.x
    FIELD = "field"  # Tr(ux)


class GBF:
    """Immutable truth table of a function V_n -> Z_{2^k}."""

    def __init__(
        self,
        n: int,
        k: int,
        table,
        domain: DomainKind = DomainKind.VECTOR,
        field: Optional[FieldCtx] = None,
    ):
        if not 1 <= n <= MAX_DEGREE:
            raise InvariantViolation(f"n must be in [1, {MAX_DEGREE}], got {n}")
        if not 1 <= k <= MAX_LEVEL:
            raise InvariantViolation(f"k must be in [1, {MAX_LEVEL}], got {k}")
        table = np.array(table, dtype=np.int64)
        if table.shape != (1 << n,):
            raise InvariantViolation(f"table length must be 2^n = {1 << n}, got {table.size}")
        if table.size and (table.min() < 0 or table.max() >= (1 << k)):
            raise InvariantViolation(f"table values must lie in [0, 2^k) = [0, {1 << k})")
        domain = DomainKind(domain)
        if domain is DomainKind.FIELD:
            if field is None:
                raise InvariantViolation("field domain requires a FieldCtx")
            if field.n != n:
                raise InvariantViolation(f"FieldCtx has degree {field.n}, function has n={n}")
        else:
            field = None
        table.setflags(write=False)
        self._n = n
        self._k = k
        self._table = table
        self._domain = domain
        self._field = field

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def domain(self) -> DomainKind:
        return self._domain

    @property
    def field(self) -> Optional[FieldCtx]:
        return self._field

    @property
    def size(self) -> int:
        return 1 << self._n

    @property
    def modulus(self) -> int:
        """Size of the value ring, 2^k."""
        return 1 << self._k

    @property
    def is_boolean(self) -> bool:
        return self._k == 1

    @property
    def is_field(self) -> bool:
        return self._domain is DomainKind.FIELD

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GBF)
            and self._n == other._n
            and self._k == other._k
            and self._domain is other._domain
            and self._field == other._field
            and np.array_equal(self._table, other._table)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"GBF(n={self._n}, k={self._k}, domain={self._domain.value})"

    def __call__(self, x: int) -> int:
        return int(self._table[x])

    # --- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int, k: int, domain: DomainKind = DomainKind.VECTOR, field: Optional[FieldCtx] = None) -> "GBF":
        return cls(n, k, np.zeros(1 << n, dtype=np.int64), domain, field)

    @classmethod
    def constant(cls, n: int, k: int, value: int, domain: DomainKind = DomainKind.VECTOR, field: Optional[FieldCtx] = None) -> "GBF":
        return cls(n, k, np.full(1 << n, value % (1 << k), dtype=np.int64), domain, field)

    @classmethod
    def from_table(cls, table, k: int, domain: DomainKind = DomainKind.VECTOR, field: Optional[FieldCtx] = None) -> "GBF":
        """n is read off the table length, which must be a power of two."""
        size = len(table)
        n = size.bit_length() - 1
        if size < 2 or size != 1 << n:
            raise InvariantViolation(f"table length must be a power of two >= 2, got {size}")
        return cls(n, k, table, domain, field)

    @classmethod
    def from_boolean(cls, table, domain: DomainKind = DomainKind.VECTOR, field: Optional[FieldCtx] = None) -> "GBF":
        return cls.from_table(table, 1, domain, field)

    @classmethod
    def from_callable(
        cls,
        n: int,
        k: int,
        fn: Callable[[tuple[int, ...]], int],
        domain: DomainKind = DomainKind.VECTOR,
        field: Optional[FieldCtx] = None,
    ) -> "GBF":
        """Build from fn(bits) where bits = (x_1, ..., x_n); values are reduced mod 2^k."""
        table = [fn(tuple((x >> i) & 1 for i in range(n))) % (1 << k) for x in range(1 << n)]
        return cls(n, k, table, domain, field)

    def with_table(self, table, k: Optional[int] = None) -> "GBF":
        """Same domain, new values (optionally at another level)."""
        return GBF(self._n, self._k if k is None else k, table, self._domain, self._field)

    def to_field(self, field: FieldCtx) -> "GBF":
        """Re-read the same table with the field inner product Tr(ux)."""
        return GBF(self._n, self._k, self._table, DomainKind.FIELD, field)

    def to_vector(self) -> "GBF":
        return GBF(self._n, self._k, self._table, DomainKind.VECTOR)

    def at_level(self, k: int) -> "GBF":
        """Embed Z_{2^j} -> Z_{2^k} by multiplying by 2^(k-j) (zeta_{2^j} = zeta_{2^k}^(2^(k-j)))."""
        if k < self._k:
            raise InvariantViolation(f"cannot embed level {self._k} into lower level {k}")
        return self.with_table(self._table << (k - self._k), k)


@dataclass(frozen=True)
class ValueDistribution:
    """counts[rho] = |{x : f_u(x) = rho}| for a fixed shift u."""

    u: int
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def random_gbf(
    n: int,
    k: int,
    rng: np.random.Generator,
    domain: DomainKind = DomainKind.VECTOR,
    field: Optional[FieldCtx] = None,
) -> GBF:
    return GBF(n, k, rng.integers(0, 1 << k, size=1 << n, dtype=np.int64), domain, field)


# --- inner products ---------------------------------------------------------

def inner_product_row(f: GBF, u: int) -> np.ndarray:
    """<u, x> over every x, with the domain's inner product."""
    x = np.arange(f.size, dtype=np.int64)
    if f.is_field:
        u = int(f.field.inner_product_map[u])
    return parity(x & u)


# --- digit decompositions ---------------------------------------------------

def digits(f: GBF) -> list[GBF]:
    """Binary digits a_1 (least significant) .. a_k, each a Boolean GBF."""
    return [f.with_table((f.table >> i) & 1, 1) for i in range(f.k)]


def recompose_digits(parts: Sequence[GBF]) -> GBF:
    if not parts:
        raise InvariantViolation("need at least one digit")
    table = sum(p.table.astype(np.int64) << i for i, p in enumerate(parts))
    return parts[0].with_table(table, len(parts))


def component_gc(f: GBF, c: Sequence[int]) -> GBF:
    """g_c = c_1 a_1 + ... + c_{k-1} a_{k-1} + a_k over F_2."""
    if f.k < 2:
        raise InvariantViolation("components g_c need k >= 2")
    if len(c) != f.k - 1:
        raise InvariantViolation(f"component index must have length k-1 = {f.k - 1}, got {len(c)}")
    table = (f.table >> (f.k - 1)) & 1
    for i, ci in enumerate(c):
        if ci & 1:
            table = table ^ ((f.table >> i) & 1)
    return f.with_table(table, 1)


def components_gc(f: GBF) -> list[tuple[tuple[int, ...], GBF]]:
    """All 2^(k-1) components in lexicographic order of c; k = 1 gives f itself."""
    if f.k == 1:
        return [((), f)]
    return [(c, component_gc(f, c)) for c in itertools.product((0, 1), repeat=f.k - 1)]


def split_low_high(f: GBF, t: int) -> tuple[GBF, GBF]:
    """f = g + 2^t h with g = f mod 2^t at level t and h = f div 2^t at level k - t."""
    if not 1 <= t < f.k:
        raise InvariantViolation(f"split point t must satisfy 1 <= t < k = {f.k}, got {t}")
    g = f.with_table(f.table & ((1 << t) - 1), t)
    h = f.with_table(f.table >> t, f.k - t)
    return g, h


def base2t_blocks(f: GBF, t: int) -> list[GBF]:
    """Base-2^t digits b_1 .. b_l, l = k / t, each at level t."""
    if t < 1 or f.k % t:
        raise InvariantViolation(f"block width t={t} must divide k={f.k}")
    mask = (1 << t) - 1
    return [f.with_table((f.table >> (j * t)) & mask, t) for j in range(f.k // t)]


def recompose_blocks(blocks: Sequence[GBF], t: int) -> GBF:
    if not blocks:
        raise InvariantViolation("need at least one block")
    table = sum(b.table.astype(np.int64) << (j * t) for j, b in enumerate(blocks))
    return blocks[0].with_table(table, t * len(blocks))


def component_base2t(f: GBF, t: int, c: Sequence[int]) -> GBF:
    """g_c = c_1 b_1 + ... + c_{l-1} b_{l-1} + b_l mod 2^t."""
    blocks = base2t_blocks(f, t)
    if len(c) != len(blocks) - 1:
        raise InvariantViolation(f"component index must have length l-1 = {len(blocks) - 1}, got {len(c)}")
    table = blocks[-1].table.copy()
    for cj, block in zip(c, blocks):
        table += cj * block.table
    return f.with_table(table & ((1 << t) - 1), t)


def components_base2t(f: GBF, t: int) -> list[tuple[tuple[int, ...], GBF]]:
    """All 2^(t(l-1)) base-2^t components in lexicographic order of c."""
    count = len(base2t_blocks(f, t))
    return [(c, component_base2t(f, t, c)) for c in itertools.product(range(1 << t), repeat=count - 1)]


# --- shifts and decimations -------------------------------------------------

def shift_msb(f: GBF, u: int) -> GBF:
    """f_u(x) = f(x) + 2^(k-1) <u, x> mod 2^k."""
    table = (f.table + (inner_product_row(f, u) << (f.k - 1))) % f.modulus
    return f.with_table(table)


def inverse_exponent(i: int, n: int) -> int:
    """j with i*j = 1 mod 2^n - 1."""
    order = (1 << n) - 1
    if gcd(i, order) != 1:
        raise InvariantViolation(f"exponent {i} is not coprime to 2^{n}-1 = {order}")
    return 1 if order == 1 else pow(i, -1, order)


def decimate(f: GBF, i: int) -> GBF:
    """g(x) = f(x^i) with 0^i := 0; field domain only."""
    if not f.is_field:
        raise InvariantViolation("decimation needs a field-domain function")
    inverse_exponent(i, f.n)
    return f.with_table(f.table[f.field.power_table(i)])


def value_distribution(f: GBF, u: int) -> ValueDistribution:
    counts = np.bincount(shift_msb(f, u).table, minlength=f.modulus).astype(np.int64)
    return ValueDistribution(u=u, counts=counts)
