"""Exact arithmetic in GF(2^n).

Elements are n-bit integers in the polynomial basis: bit i is the
coefficient of x^i. The same integers index truth tables, so a field
element and a domain point are interchangeable.

Multiplication uses log/antilog tables keyed by a verified generator for
n <= 16; larger fields fall back to carry-less multiply plus reduction.
"""

from functools import cached_property
from math import gcd
from typing import Optional

import numpy as np

from src.algebra.bits import parity, parity_int
from src.errors import InvariantViolation

MAX_DEGREE = 24
TABLE_MAX_DEGREE = 16

# Low-weight irreducible moduli (trinomials/pentanomials), little-endian bits.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x1000087,
}

# Distinct prime factors of 2^n - 1.
GROUP_ORDER_PRIMES = {
    1: (),
    2: (3,),
    3: (7,),
    4: (3, 5),
    5: (31,),
    6: (3, 7),
    7: (127,),
    8: (3, 5, 17),
    9: (7, 73),
    10: (3, 11, 31),
    11: (23, 89),
    12: (3, 5, 7, 13),
    13: (8191,),
    14: (3, 43, 127),
    15: (7, 31, 151),
    16: (3, 5, 17, 257),
    17: (131071,),
    18: (3, 7, 19, 73),
    19: (524287,),
    20: (3, 5, 11, 31, 41),
    21: (7, 127, 337),
    22: (3, 23, 89, 683),
    23: (47, 178481),
    24: (3, 5, 7, 13, 17, 241),
}


def clmul(a: int, b: int) -> int:
    """Carry-less product of two F_2[x] polynomials."""
    result = 0
    while a:
        if a & 1:
            result ^= b
        a >>= 1
        b <<= 1
    return result


def poly_mod(a: int, p: int) -> int:
    deg_p = p.bit_length()
    while a.bit_length() >= deg_p:
        a ^= p << (a.bit_length() - deg_p)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def _prime_divisors(n: int) -> list[int]:
    primes, d = [], 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


def is_irreducible(p: int) -> bool:
    """Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for primes q | n."""
    n = p.bit_length() - 1
    if n < 1:
        return False

    def frobenius_power(times: int) -> int:
        r = poly_mod(0b10, p)
        for _ in range(times):
            r = poly_mod(clmul(r, r), p)
        return r

    x = poly_mod(0b10, p)
    if frobenius_power(n) != x:
        return False
    for q in _prime_divisors(n):
        if poly_gcd(p, frobenius_power(n // q) ^ x) != 1:
            return False
    return True


class FieldCtx:
    """A concrete model of GF(2^n); immutable after construction."""

    def __init__(self, n: int, modulus: Optional[int] = None, generator: Optional[int] = None):
        if not 1 <= n <= MAX_DEGREE:
            raise InvariantViolation(f"field degree must be in [1, {MAX_DEGREE}], got n={n}")
        modulus = DEFAULT_MODULI[n] if modulus is None else modulus
        if modulus.bit_length() - 1 != n:
            raise InvariantViolation(f"modulus {modulus:#x} does not have degree {n}")
        if not is_irreducible(modulus):
            raise InvariantViolation(f"modulus {modulus:#x} is not irreducible over F_2")

        self._n = n
        self._modulus = modulus
        self._order = (1 << n) - 1
        self._exp = None
        self._log = None

        if generator is None:
            generator = self._find_generator()
        elif not self._is_generator(generator):
            raise InvariantViolation(f"element {generator:#x} is not a generator of GF(2^{n})*")
        self._generator = generator

        if n <= TABLE_MAX_DEGREE:
            self._build_tables()

    def __repr__(self) -> str:
        return f"FieldCtx(n={self._n}, modulus={self._modulus:#x}, generator={self._generator:#x})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldCtx)
            and self._n == other._n
            and self._modulus == other._modulus
        )

    def __hash__(self) -> int:
        return hash((self._n, self._modulus))

    @property
    def n(self) -> int:
        return self._n

    @property
    def modulus(self) -> int:
        return self._modulus

    @property
    def generator(self) -> int:
        return self._generator

    @property
    def size(self) -> int:
        return 1 << self._n

    @property
    def poly_hex(self) -> str:
        return f"{self._modulus:#x}"

    # --- construction helpers -------------------------------------------

    def _slow_mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self._modulus)

    def _slow_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return result

    def _is_generator(self, g: int) -> bool:
        if not 0 < g < self.size:
            return False
        if self._slow_pow(g, self._order) != 1:
            return False
        return all(self._slow_pow(g, self._order // p) != 1 for p in GROUP_ORDER_PRIMES[self._n])

    def _find_generator(self) -> int:
        for candidate in range(2 if self._n > 1 else 1, self.size):
            if self._is_generator(candidate):
                return candidate
        raise InvariantViolation(f"no generator found for modulus {self._modulus:#x}")

    def _build_tables(self):
        order = self._order
        exp = np.zeros(2 * order, dtype=np.int64)
        log = np.full(self.size, -1, dtype=np.int64)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, self._generator)
        exp[order:] = exp[:order]
        exp.setflags(write=False)
        log.setflags(write=False)
        self._exp, self._log = exp, log

    # --- scalar arithmetic ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        """Field product; inputs are masked to n bits."""
        a &= self._order
        b &= self._order
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[self._log[a] + self._log[b]])
        return self._slow_mul(a, b)

    def power(self, a: int, e: int) -> int:
        a &= self._order
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            return int(self._exp[(int(self._log[a]) * e) % self._order])
        return self._slow_pow(a, e % self._order)

    def inv(self, a: int) -> int:
        if a & self._order == 0:
            raise InvariantViolation("0 has no multiplicative inverse")
        return self.power(a, self._order - 1)

    def trace(self, a: int) -> int:
        """Absolute trace Tr(a) = a + a^2 + ... + a^(2^(n-1)), as a bit."""
        return parity_int(a & self.trace_mask)

    def rel_trace(self, m: int, a: int) -> int:
        """Relative trace to the subfield GF(2^m): sum of a^(2^(jm)), j < n/m."""
        if m < 1 or self._n % m:
            raise InvariantViolation(f"relative trace needs m | n, got m={m}, n={self._n}")
        total, term = 0, a & self._order
        for _ in range(self._n // m):
            total ^= term
            for _ in range(m):
                term = self.mul(term, term)
        return total

    def is_in_subfield(self, m: int, a: int) -> bool:
        """True when a^(2^m) = a."""
        return self.power(a, 1 << m) == a & self._order

    # --- tables -----------------------------------------------------------

    @cached_property
    def trace_mask(self) -> int:
        """Bit j is Tr(x^j); Tr is F_2-linear so Tr(a) = parity(a & mask)."""
        mask = 0
        for j in range(self._n):
            term, total = 1 << j, 0
            for _ in range(self._n):
                total ^= term
                term = self.mul(term, term)
            if total not in (0, 1):
                raise InvariantViolation(f"trace of x^{j} left F_2: {total:#x}")
            mask |= total << j
        return mask

    @cached_property
    def elements(self) -> np.ndarray:
        arr = np.arange(self.size, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    def mul_array(self, a, b) -> np.ndarray:
        """Elementwise product of two broadcastable integer arrays."""
        a = np.asarray(a, dtype=np.int64) & self._order
        b = np.asarray(b, dtype=np.int64) & self._order
        if self._exp is None:
            return np.vectorize(self._slow_mul, otypes=[np.int64])(a, b)
        a, b = np.broadcast_arrays(a, b)
        zero = (a == 0) | (b == 0)
        idx = self._log[np.where(zero, 1, a)] + self._log[np.where(zero, 1, b)]
        return np.where(zero, 0, self._exp[idx])

    def power_table(self, i: int) -> np.ndarray:
        """Table x -> x^i over the whole field, with 0^i := 0."""
        if self._exp is None:
            table = np.array([self.power(x, i) if x else 0 for x in range(self.size)], dtype=np.int64)
        else:
            table = np.zeros(self.size, dtype=np.int64)
            nonzero = self.elements[1:]
            table[1:] = self._exp[(self._log[nonzero] * (i % self._order)) % self._order]
        return table

    @cached_property
    def trace_table(self) -> np.ndarray:
        table = parity(self.elements & self.trace_mask)
        table.setflags(write=False)
        return table

    @cached_property
    def inner_product_map(self) -> np.ndarray:
        """tau with Tr(u x) = parity(tau(u) & x); a linear bijection of GF(2^n)."""
        tau = np.zeros(self.size, dtype=np.int64)
        for j in range(self._n):
            products = self.mul_array(self.elements, 1 << j)
            tau |= parity(products & self.trace_mask) << j
        tau.setflags(write=False)
        return tau

    def subfield_elements(self, m: int) -> list[int]:
        """Elements of the subfield GF(2^m), in ascending integer order."""
        if m < 1 or self._n % m:
            raise InvariantViolation(f"GF(2^{m}) is not a subfield of GF(2^{self._n})")
        step = self._order // ((1 << m) - 1)
        members = {0} | {self.power(self._generator, step * s) for s in range((1 << m) - 1)}
        return sorted(members)

    def coset_decompose(self) -> tuple[list[int], list[int]]:
        """Split GF(2^n)* = GF(2^m)* x U with m = n/2 and |U| = 2^m + 1.

        Returns (subfield_star, U) with subfield_star[s] = g^((2^m+1)s) and
        U[t] = g^((2^m-1)t) for the field generator g.
        """
        if self._n % 2:
            raise InvariantViolation(f"coset decomposition needs even n, got n={self._n}")
        m = self._n // 2
        g = self._generator
        subfield_star = [self.power(g, ((1 << m) + 1) * s) for s in range((1 << m) - 1)]
        units = [self.power(g, ((1 << m) - 1) * t) for t in range((1 << m) + 1)]
        return subfield_star, units

    def coprime_exponents(self) -> list[int]:
        """Decimation exponents 1 <= i <= 2^n - 2 with gcd(i, 2^n - 1) = 1."""
        if self._order == 1:
            return [1]
        return [i for i in range(1, self._order) if gcd(i, self._order) == 1]

    def inverse_exponent(self, i: int) -> int:
        """j with i*j = 1 mod 2^n - 1."""
        if gcd(i, self._order) != 1:
            raise InvariantViolation(f"exponent {i} is not coprime to 2^{self._n}-1")
        if self._order == 1:
            return 1
        return pow(i, -1, self._order)


_FIELD_CACHE: dict[tuple[int, int], FieldCtx] = {}


def get_field(n: int, modulus: Optional[int] = None) -> FieldCtx:
    """Shared FieldCtx per (n, modulus); contexts are immutable, so sharing is safe."""
    modulus = DEFAULT_MODULI.get(n) if modulus is None else modulus
    key = (n, modulus)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FieldCtx(n, modulus)
    return _FIELD_CACHE[key]


def field_for_degree(n: int, config: Optional[dict] = None) -> FieldCtx:
    """FieldCtx for degree n, honouring `field.moduli` overrides in config/gbentlab.yaml."""
    from src.config import modulus_overrides

    return get_field(n, modulus_overrides(config).get(n))
