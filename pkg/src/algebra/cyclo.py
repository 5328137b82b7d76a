"""Exact arithmetic in Z[zeta] for zeta a primitive 2^k-th root of unity.

A CycloInt stores the coefficients of 1, zeta, ..., zeta^(L-1) with
L = 2^(k-1); the relation zeta^L = -1 is applied eagerly, so equal
values of the same level have equal coordinates.

Spectra keep many values at once, so the module also provides row-wise
helpers over int64 matrices of shape (..., L).
"""

import cmath
from dataclasses import dataclass

import numpy as np

from src.errors import InvariantViolation, ParseError, PathDisagreement

MAX_LEVEL = 10


def coord_count(k: int) -> int:
    if not 1 <= k <= MAX_LEVEL:
        raise InvariantViolation(f"cyclotomic level must be in [1, {MAX_LEVEL}], got k={k}")
    return 1 << (k - 1)


@dataclass(frozen=True)
class CycloInt:
    """Element of Z[zeta_{2^k}] in the power basis."""

    k: int
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != coord_count(self.k):
            raise InvariantViolation(
                f"level {self.k} needs {coord_count(self.k)} coordinates, got {len(coords)}"
            )
        object.__setattr__(self, "coords", coords)

    # --- constructors -------------------------------------------------------

    @classmethod
    def integer(cls, k: int, value: int) -> "CycloInt":
        coords = [0] * coord_count(k)
        coords[0] = value
        return cls(k, tuple(coords))

    @classmethod
    def zero(cls, k: int) -> "CycloInt":
        return cls.integer(k, 0)

    @classmethod
    def one(cls, k: int) -> "CycloInt":
        return cls.integer(k, 1)

    # --- ring operations ----------------------------------------------------

    def _coerce(self, other) -> "CycloInt":
        if isinstance(other, CycloInt):
            return other
        if isinstance(other, (int, np.integer)):
            return CycloInt.integer(self.k, int(other))
        raise TypeError(f"cannot combine CycloInt with {type(other).__name__}")

    def _align(self, other) -> tuple["CycloInt", "CycloInt"]:
        other = self._coerce(other)
        level = max(self.k, other.k)
        return self.lift(level), other.lift(level)

    def __add__(self, other) -> "CycloInt":
        a, b = self._align(other)
        return CycloInt(a.k, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.k, tuple(-x for x in self.coords))

    def __sub__(self, other) -> "CycloInt":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycloInt":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycloInt":
        if isinstance(other, (int, np.integer)):
            return CycloInt(self.k, tuple(int(other) * x for x in self.coords))
        a, b = self._align(other)
        size = len(a.coords)
        out = [0] * size
        # Negacyclic convolution: zeta^L = -1.
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if not y:
                    continue
                p = i + j
                if p < size:
                    out[p] += x * y
                else:
                    out[p - size] -= x * y
        return CycloInt(a.k, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycloInt":
        if e < 0:
            raise InvariantViolation("negative powers are not defined in Z[zeta]")
        result, base = CycloInt.one(self.k), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> "CycloInt":
        """Complex conjugate: zeta^j -> zeta^(-j) = -zeta^(L-j)."""
        size = len(self.coords)
        out = [0] * size
        out[0] = self.coords[0]
        for j in range(1, size):
            out[size - j] = -self.coords[j]
        return CycloInt(self.k, tuple(out))

    def norm_sq(self) -> "CycloInt":
        """|a|^2 = a * conj(a); a real element of the ring."""
        return self * self.conj()

    def lift(self, k_new: int) -> "CycloInt":
        """Same complex number written at level k_new >= k."""
        if k_new < self.k:
            raise InvariantViolation(f"cannot lift level {self.k} down to {k_new}")
        if k_new == self.k:
            return self
        stride = 1 << (k_new - self.k)
        out = [0] * coord_count(k_new)
        for j, x in enumerate(self.coords):
            out[j * stride] = x
        return CycloInt(k_new, tuple(out))

    def exact_div(self, d: int) -> "CycloInt":
        """Divide every coordinate by d; inexact division is a computation bug."""
        if any(x % d for x in self.coords):
            raise PathDisagreement(f"inexact division of {self.coords} by {d}")
        return CycloInt(self.k, tuple(x // d for x in self.coords))

    # --- inspection ---------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> int:
        if not self.is_rational():
            raise InvariantViolation(f"{self.coords} is not a rational integer")
        return self.coords[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_complex(self) -> complex:
        """Floating evaluation; for reports only."""
        root = cmath.exp(2j * cmath.pi / (1 << self.k))
        return sum(x * root**j for j, x in enumerate(self.coords))

    def to_json(self) -> dict:
        return {"k": self.k, "coords": list(self.coords)}

    @classmethod
    def from_json(cls, data: dict) -> "CycloInt":
        try:
            return cls(int(data["k"]), tuple(int(x) for x in data["coords"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"malformed CycloInt JSON: {e}")

    def __str__(self) -> str:
        terms = []
        for j, x in enumerate(self.coords):
            if x:
                terms.append(str(x) if j == 0 else f"{x}*z^{j}")
        return " + ".join(terms) if terms else "0"


def zeta_pow(k: int, e: int) -> CycloInt:
    """zeta_{2^k}^e reduced to the power basis."""
    size = coord_count(k)
    e %= 2 * size
    coords = [0] * size
    if e < size:
        coords[e] = 1
    else:
        coords[e - size] = -1
    return CycloInt(k, tuple(coords))


def sqrt2(k: int) -> CycloInt:
    """sqrt(2) = zeta_8 + zeta_8^-1, written at level k >= 3."""
    if k < 3:
        raise InvariantViolation(f"sqrt(2) lies in Z[zeta_{{2^k}}] only for k >= 3, got k={k}")
    s = 1 << (k - 3)
    return zeta_pow(k, s) - zeta_pow(k, 3 * s)


def zeta_sum(k: int, exponents) -> CycloInt:
    """Sum of zeta^e over an iterable of exponents."""
    counts = np.bincount(np.asarray(list(exponents), dtype=np.int64) % (1 << k), minlength=1 << k)
    return CycloInt(k, tuple(int(x) for x in counts @ zeta_matrix(k)))


# --- row-wise helpers on int64 coordinate matrices ----------------------------

def zeta_matrix(k: int) -> np.ndarray:
    """Row e holds the coordinates of zeta^e, e in [0, 2^k)."""
    size = coord_count(k)
    eye = np.eye(size, dtype=np.int64)
    return np.concatenate([eye, -eye], axis=0)


def rotate_rows(coords: np.ndarray, j: int, k: int) -> np.ndarray:
    """Multiply every row of coords (shape (..., L)) by zeta^j."""
    size = coord_count(k)
    j %= 2 * size
    sign = 1
    if j >= size:
        sign, j = -1, j - size
    if j == 0:
        return sign * coords
    return sign * np.concatenate([-coords[..., size - j:], coords[..., : size - j]], axis=-1)


def mul_rows(coords: np.ndarray, factor: CycloInt) -> np.ndarray:
    """Multiply every row of coords by the constant factor (same level)."""
    if factor.k != int(np.log2(coords.shape[-1])) + 1:
        raise InvariantViolation(f"factor level {factor.k} does not match {coords.shape[-1]} coordinates")
    out = np.zeros_like(coords)
    for j, x in enumerate(factor.coords):
        if x:
            out += x * rotate_rows(coords, j, factor.k)
    return out


def conj_rows(coords: np.ndarray) -> np.ndarray:
    out = np.empty_like(coords)
    out[..., 0] = coords[..., 0]
    out[..., 1:] = -coords[..., :0:-1]
    return out


def norm_sq_rows(coords: np.ndarray, k: int) -> np.ndarray:
    """Row-wise a * conj(a) for a stack of values at level k."""
    size = coord_count(k)
    conj = conj_rows(coords)
    out = np.zeros_like(coords)
    for j in range(size):
        out += conj[..., j : j + 1] * rotate_rows(coords, j, k)
    return out


def lift_rows(coords: np.ndarray, k: int, k_new: int) -> np.ndarray:
    if k_new < k:
        raise InvariantViolation(f"cannot lift level {k} down to {k_new}")
    out = np.zeros(coords.shape[:-1] + (coord_count(k_new),), dtype=np.int64)
    out[..., :: 1 << (k_new - k)] = coords
    return out

