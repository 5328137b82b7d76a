"""Exact generalized Walsh-Hadamard transforms.

Two independent paths compute the same spectrum:

- direct: group the shifted values f(x) + 2^(k-1)<u,x> by residue and
  sum counts[u, rho] * zeta^rho. Quadratic in 2^n; the reference oracle.
- components: 2^(k-1) fast Boolean transforms of the components g_c,
  recombined with fixed cyclotomic weights B_c and one exact division.

Both return a Spectrum whose coordinates are an int64 matrix of shape
(2^n, 2^(k-1)); row u is H_f(u) in the power basis.
"""

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

import numpy as np

from src.algebra.bits import parity
from src.algebra.cyclo import (
    CycloInt,
    coord_count,
    lift_rows,
    mul_rows,
    norm_sq_rows,
    zeta_matrix,
    zeta_pow,
)
from src.algebra.field import FieldCtx
from src.errors import InvariantViolation, PathDisagreement
from src.functions.gbf import GBF, DomainKind, components_base2t, components_gc, decimate, inverse_exponent

DIRECT_CHUNK_CELLS = 1 << 20
INT64_SAFE_BITS = 62


class Spectrum:
    """Full transform of a GBF: one CycloInt per domain point."""

    def __init__(
        self,
        n: int,
        k: int,
        coords: np.ndarray,
        domain: DomainKind = DomainKind.VECTOR,
        field: Optional[FieldCtx] = None,
    ):
        coords = np.asarray(coords, dtype=np.int64)
        if coords.shape != (1 << n, coord_count(k)):
            raise InvariantViolation(
                f"spectrum at n={n}, k={k} needs shape {(1 << n, coord_count(k))}, got {coords.shape}"
            )
        coords.setflags(write=False)
        self.n = n
        self.k = k
        self.coords = coords
        self.domain = domain
        self.field = field

    @classmethod
    def like(cls, f: GBF, coords: np.ndarray, k: Optional[int] = None) -> "Spectrum":
        return cls(f.n, f.k if k is None else k, coords, f.domain, f.field)

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, u: int) -> CycloInt:
        return CycloInt(self.k, tuple(int(x) for x in self.coords[u]))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Spectrum)
            and self.n == other.n
            and self.k == other.k
            and np.array_equal(self.coords, other.coords)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Spectrum(n={self.n}, k={self.k})"

    def values(self) -> list[CycloInt]:
        return [self[u] for u in range(len(self))]

    def norm_sq_coords(self) -> np.ndarray:
        """Row u is |H(u)|^2 in the power basis."""
        return norm_sq_rows(self.coords, self.k)

    def lift(self, k_new: int) -> "Spectrum":
        return Spectrum(self.n, k_new, lift_rows(self.coords, self.k, k_new), self.domain, self.field)

    def to_complex(self) -> np.ndarray:
        root = np.exp(2j * np.pi / (1 << self.k))
        return self.coords @ root ** np.arange(coord_count(self.k))

    def to_json(self, with_float: bool = True) -> dict:
        floats = self.to_complex() if with_float else None
        values = []
        for u in range(len(self)):
            entry = {"u": u, "coords": [int(x) for x in self.coords[u]]}
            if with_float:
                entry["complex"] = [float(floats[u].real), float(floats[u].imag)]
            values.append(entry)
        return {"n": self.n, "k": self.k, "domain": self.domain.value, "values": values}


# --- helpers ----------------------------------------------------------------

def _ip_keys(f: GBF, u: np.ndarray) -> np.ndarray:
    """Masks m(u) with <u, x> = parity(m(u) & x)."""
    if f.is_field:
        return f.field.inner_product_map[u]
    return u


def _run_chunks(fn, chunks: Sequence, threads: int) -> list:
    """Apply fn to every chunk, preserving chunk order."""
    if threads <= 1 or len(chunks) <= 1:
        return [fn(c) for c in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, chunks))


def _split(total: int, step: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def check_int64_range(n: int, k: int):
    """Reject sizes whose intermediates could leave int64.

    Component recombination reaches 2^(n + 2k - 2) and |H|^2 reaches 2^(2n + k - 1).
    """
    bits = max(n + 2 * k - 2, 2 * n + k - 1)
    if bits > INT64_SAFE_BITS:
        raise InvariantViolation(f"n={n}, k={k} needs {bits}-bit intermediates, beyond int64")


def fwht_columns(data: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard butterfly along axis 0 (length 2^n)."""
    data = np.array(data, dtype=np.int64)
    size = data.shape[0]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise InvariantViolation(f"butterfly needs a power-of-two length, got {size}")
    tail = data.shape[1:]
    for i in range(n):
        blocks = data.reshape((size >> (i + 1), 2, 1 << i) + tail)
        lo, hi = blocks[:, 0], blocks[:, 1]
        data = np.stack([lo + hi, lo - hi], axis=1).reshape(data.shape)
    return data


# --- direct path --------------------------------------------------------------

def distribution_matrix(f: GBF, threads: int = 1) -> np.ndarray:
    """counts[u, rho] = |{x : f(x) + 2^(k-1)<u,x> = rho mod 2^k}|."""
    size, q = f.size, f.modulus
    x = np.arange(size, dtype=np.int64)
    step = max(1, DIRECT_CHUNK_CELLS // size)
    top = f.k - 1

    def block(bounds: tuple[int, int]) -> np.ndarray:
        lo, hi = bounds
        keys = _ip_keys(f, np.arange(lo, hi, dtype=np.int64))
        shifted = (f.table[None, :] + (parity(keys[:, None] & x[None, :]) << top)) % q
        offsets = (np.arange(hi - lo, dtype=np.int64) * q)[:, None]
        return np.bincount((shifted + offsets).ravel(), minlength=(hi - lo) * q).reshape(hi - lo, q)

    return np.concatenate(_run_chunks(block, _split(size, step), threads), axis=0)


def gwht_direct(f: GBF, threads: int = 1) -> Spectrum:
    """H_f(u) = sum_x zeta^f(x) (-1)^<u,x>, by value-distribution grouping."""
    check_int64_range(f.n, f.k)
    return Spectrum.like(f, distribution_matrix(f, threads) @ zeta_matrix(f.k))


# --- fast Boolean path --------------------------------------------------------

def _boolean_spectra(f: GBF, tables: np.ndarray, threads: int = 1) -> np.ndarray:
    """Walsh spectra of Boolean tables given as columns; field domains are re-indexed."""
    check_int64_range(f.n, f.k)
    signs = 1 - 2 * tables.astype(np.int64)
    columns = _split(signs.shape[1], max(1, signs.shape[1] // max(threads, 1)))
    parts = _run_chunks(lambda b: fwht_columns(signs[:, b[0]:b[1]]), columns, threads)
    spectra = np.concatenate(parts, axis=1)
    if f.is_field:
        spectra = spectra[f.field.inner_product_map]
    return spectra


def wht_fast(f: GBF) -> Spectrum:
    """W_f(u) = sum_x (-1)^(f(x) + <u,x>) by the O(n 2^n) butterfly."""
    if not f.is_boolean:
        raise InvariantViolation(f"wht_fast needs a Boolean function (k=1), got k={f.k}")
    return Spectrum.like(f, _boolean_spectra(f, f.table[:, None]))


wht = wht_fast


def vandermonde_h(alpha: int, z: CycloInt, t: int) -> CycloInt:
    """h_alpha(z) = sum_beta zeta_{2^t}^(-alpha beta) z^beta, beta in Z_{2^t}."""
    k = z.k
    if t > k:
        raise InvariantViolation(f"h_alpha needs t <= level of z, got t={t}, k={k}")
    total, power = CycloInt.zero(k), CycloInt.one(k)
    for beta in range(1 << t):
        total = total + zeta_pow(k, -alpha * beta << (k - t)) * power
        power = power * z
    return total


def vandermonde_weight(c: Sequence[int], t: int, k: int) -> CycloInt:
    """B_c = prod_j h_{c_j}(zeta_{2^k}^(2^(jt))), j = 0 .. l-2; t = 1 gives prod (1 + (-1)^c_j zeta^(2^j))."""
    weight = CycloInt.one(k)
    for j, cj in enumerate(c):
        weight = weight * vandermonde_h(cj, zeta_pow(k, 1 << (j * t)), t)
    return weight


def _weight_matrix(vectors: Sequence[Sequence[int]], t: int, k: int) -> np.ndarray:
    return np.array([vandermonde_weight(c, t, k).coords for c in vectors], dtype=np.int64).reshape(
        len(vectors), coord_count(k)
    )


def _exact_shift(coords: np.ndarray, bits: int) -> np.ndarray:
    divisor = 1 << bits
    if np.any(coords % divisor):
        raise PathDisagreement(f"component recombination is not divisible by 2^{bits}")
    return coords // divisor


def combine_component_spectra(components: Sequence[Spectrum], k: int) -> Spectrum:
    """H_f = 2^-(k-1) sum_c B_c W_{g_c}, components in lexicographic order of c."""
    expected = 1 << (k - 1)
    if len(components) != expected:
        raise InvariantViolation(f"need {expected} component spectra at k={k}, got {len(components)}")
    if any(s.k != 1 for s in components):
        raise InvariantViolation("component spectra must be Boolean (level 1)")
    walsh = np.concatenate([s.coords for s in components], axis=1)
    vectors = list(itertools.product((0, 1), repeat=k - 1))
    coords = _exact_shift(walsh @ _weight_matrix(vectors, 1, k), k - 1)
    first = components[0]
    return Spectrum(first.n, k, coords, first.domain, first.field)


def combine_base2t_spectra(components: Sequence[Spectrum], t: int, k: int) -> Spectrum:
    """H_f = 2^-(k-t) sum_c B_c H_{g_c}, with level-2^t component spectra lifted to level k."""
    if t < 1 or k % t:
        raise InvariantViolation(f"block width t={t} must divide k={k}")
    blocks = k // t
    vectors = list(itertools.product(range(1 << t), repeat=blocks - 1))
    if len(components) != len(vectors):
        raise InvariantViolation(f"need {len(vectors)} component spectra, got {len(components)}")
    if any(s.k != t for s in components):
        raise InvariantViolation(f"component spectra must be at level t={t}")
    first = components[0]
    total = np.zeros((len(first), coord_count(k)), dtype=np.int64)
    for c, spectrum in zip(vectors, components):
        total += mul_rows(lift_rows(spectrum.coords, t, k), vandermonde_weight(c, t, k))
    return Spectrum(first.n, k, _exact_shift(total, k - t), first.domain, first.field)


def gwht_fast_components(f: GBF, threads: int = 1) -> Spectrum:
    """Generalized transform through the 2^(k-1) Boolean components g_c."""
    parts = components_gc(f)
    tables = np.stack([g.table for _, g in parts], axis=1)
    walsh = _boolean_spectra(f, tables, threads)
    if f.k == 1:
        return Spectrum.like(f, walsh)
    weights = _weight_matrix([c for c, _ in parts], 1, f.k)
    return Spectrum.like(f, _exact_shift(walsh @ weights, f.k - 1))


def gwht_base2t(f: GBF, t: int, threads: int = 1) -> Spectrum:
    """Generalized transform through the base-2^t components, each at level t."""
    check_int64_range(f.n, f.k)
    parts = components_base2t(f, t)
    spectra = _run_chunks(lambda g: gwht(g, threads=1), [g for _, g in parts], threads)
    return combine_base2t_spectra(spectra, t, f.k)


def gwht(f: GBF, threads: int = 1, check_paths: bool = False) -> Spectrum:
    """Generalized transform by the component path; check_paths compares with the direct path."""
    spectrum = gwht_fast_components(f, threads)
    if check_paths:
        reference = gwht_direct(f, threads)
        if spectrum != reference:
            bad = int(np.flatnonzero(np.any(spectrum.coords != reference.coords, axis=1))[0])
            raise PathDisagreement(f"component and direct transforms differ at u={bad}")
    return spectrum


def ewht(f: GBF, i: int, threads: int = 1) -> Spectrum:
    """Extended transform H_{f,i}(u) = sum_x zeta^f(x) (-1)^Tr(u x^i) = H_{f(x^j)}(u), ij = 1."""
    if not f.is_field:
        raise InvariantViolation("extended transform needs a field-domain function")
    return gwht(decimate(f, inverse_exponent(i, f.n)), threads)


# --- identities ---------------------------------------------------------------

def parseval_ok(spectrum: Spectrum) -> bool:
    """sum_u |H(u)|^2 = 2^(2n) exactly."""
    total = spectrum.norm_sq_coords().sum(axis=0)
    expected = np.zeros_like(total)
    expected[0] = 1 << (2 * spectrum.n)
    return bool(np.array_equal(total, expected))


def inverse_gwht(spectrum: Spectrum) -> GBF:
    """Recover f from 2^n zeta^f(x) = sum_u H(u) (-1)^<u,x>."""
    check_int64_range(spectrum.n, spectrum.k)
    coords = spectrum.coords
    if spectrum.domain is DomainKind.FIELD:
        permuted = np.empty_like(coords)
        permuted[spectrum.field.inner_product_map] = coords
        coords = permuted
    units = fwht_columns(coords)
    size = len(spectrum)
    if np.any(units % size):
        raise InvariantViolation("spectrum is not the transform of a generalized Boolean function")
    units //= size
    nonzero = units != 0
    if not np.all(nonzero.sum(axis=1) == 1) or not np.all(np.abs(units).sum(axis=1) == 1):
        raise InvariantViolation("spectrum is not the transform of a generalized Boolean function")
    position = np.argmax(nonzero, axis=1)
    negative = units[np.arange(size), position] < 0
    table = position + negative * coord_count(spectrum.k)
    return GBF(spectrum.n, spectrum.k, table, spectrum.domain, spectrum.field)
