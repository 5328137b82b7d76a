"""Exact decision procedures for bent, semibent, gbent and hyperbent classes.

Every verdict compares CycloInt coordinates; |H(u)| = 2^(n/2) is tested as
|H(u)|^2 = 2^n, which stays exact for odd n.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np

from src.algebra.bits import parity
from src.algebra.cyclo import coord_count, zeta_pow
from src.errors import InvariantViolation, NotGbent, NotRegular
from src.functions.gbf import GBF
from src.props.reports import PropertyReport
from src.spectral.transforms import Spectrum, distribution_matrix, ewht, gwht, wht_fast

MATCH_CHUNK_CELLS = 1 << 22


# --- spectrum level helpers ---------------------------------------------------

def _first(mask: np.ndarray) -> Optional[int]:
    bad = np.flatnonzero(mask)
    return int(bad[0]) if bad.size else None


def _walsh(f: GBF) -> np.ndarray:
    return wht_fast(f).coords[:, 0]


def _flat_mask(spectrum: Spectrum) -> np.ndarray:
    """Rows u with |H(u)|^2 = 2^n."""
    norms = spectrum.norm_sq_coords()
    return (norms[:, 0] == 1 << spectrum.n) & ~np.any(norms[:, 1:], axis=1)


def _match_templates(rows: np.ndarray, templates: np.ndarray) -> np.ndarray:
    """Index of the template equal to each row, -1 where none matches."""
    out = np.full(rows.shape[0], -1, dtype=np.int64)
    step = max(1, MATCH_CHUNK_CELLS // max(1, templates.size))
    for lo in range(0, rows.shape[0], step):
        block = rows[lo:lo + step]
        hits = np.all(block[:, None, :] == templates[None, :, :], axis=2)
        found = hits.any(axis=1)
        out[lo:lo + step] = np.where(found, hits.argmax(axis=1), -1)
    return out


def regular_templates(n: int, k: int) -> Optional[np.ndarray]:
    """Row rho = the regular value 2^(n/2) zeta^rho, or None when it is not in Z[zeta]."""
    if n % 2 == 0:
        scale = 1 << (n // 2)
        return np.array([(scale * zeta_pow(k, rho)).coords for rho in range(1 << k)], dtype=np.int64)
    if k >= 3:
        scale, s = 1 << ((n - 1) // 2), 1 << (k - 3)
        return np.array(
            [(scale * (zeta_pow(k, rho - s) + zeta_pow(k, rho + s))).coords for rho in range(1 << k)],
            dtype=np.int64,
        )
    return None


def regular_exponents(spectrum: Spectrum) -> Optional[np.ndarray]:
    """rho_u with H(u) = 2^(n/2) zeta^rho_u (-1 where H(u) has another form)."""
    templates = regular_templates(spectrum.n, spectrum.k)
    if templates is None:
        return None
    return _match_templates(spectrum.coords, templates)


def _exceptional_mask(spectrum: Spectrum) -> np.ndarray:
    """Rows of the form 2^((n-1)/2)(+-1 +- i), the odd n, k = 2 gbent shape."""
    if spectrum.n % 2 == 0 or spectrum.k != 2:
        return np.zeros(len(spectrum), dtype=bool)
    scale = 1 << ((spectrum.n - 1) // 2)
    return np.all(np.abs(spectrum.coords) == scale, axis=1)


# --- Boolean classes ----------------------------------------------------------

def _require_boolean(f: GBF, name: str):
    if not f.is_boolean:
        raise InvariantViolation(f"{name} needs a Boolean function (k=1), got k={f.k}")


def is_bent(f: GBF) -> PropertyReport:
    """|W_f(u)| = 2^(n/2) for every u; n even."""
    _require_boolean(f, "bent")
    if f.n % 2:
        raise InvariantViolation(f"bent functions exist only for even n, got n={f.n}")
    walsh = _walsh(f)
    bad = _first(walsh * walsh != 1 << f.n)
    if bad is not None:
        return PropertyReport("bent", False, f.n, f.k, witness={"u": bad, "walsh": int(walsh[bad])})
    dual = (walsh < 0).astype(int).tolist()
    return PropertyReport("bent", True, f.n, f.k, certificate={"dual": dual})


def is_semibent(f: GBF) -> PropertyReport:
    """W_f(u) in {0, +-2^((n+1)/2)} for every u; n odd."""
    _require_boolean(f, "semibent")
    if f.n % 2 == 0:
        raise InvariantViolation(f"semibent is defined here for odd n, got n={f.n}")
    walsh = _walsh(f)
    peak = 1 << ((f.n + 1) // 2)
    bad = _first((walsh != 0) & (np.abs(walsh) != peak))
    if bad is not None:
        return PropertyReport("semibent", False, f.n, f.k, witness={"u": bad, "walsh": int(walsh[bad])})
    return PropertyReport("semibent", True, f.n, f.k, certificate={"support_size": int(np.count_nonzero(walsh))})


def walsh_support(f: GBF) -> list[int]:
    """Points u with W_f(u) != 0."""
    _require_boolean(f, "walsh_support")
    return np.flatnonzero(_walsh(f)).tolist()


# --- generalized classes ------------------------------------------------------

def _gbent_from_spectrum(spectrum: Spectrum, name: str = "gbent") -> PropertyReport:
    n, k = spectrum.n, spectrum.k
    bad = _first(~_flat_mask(spectrum))
    if bad is not None:
        return PropertyReport(
            name, False, n, k,
            witness={"u": bad, "norm_sq": spectrum[bad].norm_sq().coords[0]},
        )
    rho = regular_exponents(spectrum)
    if rho is None:
        odd = _first(~_exceptional_mask(spectrum))
        if odd is not None:
            raise InvariantViolation(f"flat spectrum at n={n}, k={k} is not of the exceptional form at u={odd}")
        return PropertyReport(name, True, n, k, certificate={"form": "exceptional"})
    if np.any(rho < 0):
        raise InvariantViolation(
            f"flat spectrum at n={n}, k={k} is not of the regular form at u={_first(rho < 0)}"
        )
    return PropertyReport(name, True, n, k, certificate={"form": "regular", "rho": rho.tolist()})


def is_gbent(f: GBF, spectrum: Optional[Spectrum] = None, threads: int = 1) -> PropertyReport:
    """|H_f(u)|^2 = 2^n for every u, with rho_u recorded when H has the regular form."""
    return _gbent_from_spectrum(spectrum if spectrum is not None else gwht(f, threads))


def is_regular(f: GBF, spectrum: Optional[Spectrum] = None, threads: int = 1) -> PropertyReport:
    """H_f(u) = 2^(n/2) zeta^rho_u for every u."""
    spectrum = spectrum if spectrum is not None else gwht(f, threads)
    rho = regular_exponents(spectrum)
    if rho is None:
        return PropertyReport(
            "regular", False, f.n, f.k, witness={"u": 0},
            detail=f"2^(n/2) is not in Z[zeta_{1 << f.k}] for n={f.n}",
        )
    bad = _first(rho < 0)
    if bad is not None:
        return PropertyReport("regular", False, f.n, f.k, witness={"u": bad})
    return PropertyReport("regular", True, f.n, f.k, certificate={"rho": rho.tolist()})


def dual(f: GBF, spectrum: Optional[Spectrum] = None, threads: int = 1) -> GBF:
    """f* with H_f(u) = 2^(n/2) zeta^f*(u)."""
    if f.n % 2 and f.k == 2:
        raise NotRegular(f"n={f.n} odd with k=2: the gbent spectrum has no regular form")
    report = is_gbent(f, spectrum, threads)
    if not report.verdict:
        raise NotGbent(f"function is not gbent (witness {report.witness})")
    if report.certificate.get("form") != "regular":
        raise NotRegular(f"gbent spectrum is not regular: {report.certificate}")
    return f.with_table(report.certificate["rho"])


# --- count criteria -----------------------------------------------------------

def _count_templates(n: int, k: int, odd: bool) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Expected D(r) = b_{r+L} - b_r on r in [0, L) for every (rho, sign), rho < L."""
    size = coord_count(k)
    rows, labels = [], []
    for rho in range(size):
        for sign in (-1, 1):
            d = np.zeros(2 * size, dtype=np.int64)
            if odd:
                s, amp = 1 << (k - 3), 1 << ((n - 1) // 2)
                for r in (rho - s, rho + s):
                    d[r % (2 * size)] = sign * amp
            else:
                d[rho] = sign * (1 << (n // 2))
            # D(r + L) = -D(r); fold onto [0, L).
            rows.append(d[:size] - d[size:])
            labels.append((rho, sign))
    return np.array(rows, dtype=np.int64), labels


def _counts_report(f: GBF, name: str, odd: bool, threads: int) -> PropertyReport:
    counts = distribution_matrix(f, threads)
    size = coord_count(f.k)
    diffs = counts[:, size:] - counts[:, :size]
    templates, labels = _count_templates(f.n, f.k, odd)
    hits = _match_templates(diffs, templates)
    bad = _first(hits < 0)
    if bad is not None:
        return PropertyReport(name, False, f.n, f.k, witness={"u": bad, "counts": counts[bad].tolist()})
    certificate = [
        {"u": u, "rho": labels[h][0], "sign": labels[h][1]} for u, h in enumerate(hits.tolist())
    ]
    return PropertyReport(name, True, f.n, f.k, certificate={"rho_sign": certificate})


def check_gbent_by_counts_even(f: GBF, threads: int = 1) -> PropertyReport:
    """b_{rho+L} = b_rho +- 2^(n/2) for one rho < L and b_{j+L} = b_j otherwise; n even."""
    if f.n % 2:
        raise InvariantViolation(f"even-n count criterion called with n={f.n}")
    return _counts_report(f, "counts-even", odd=False, threads=threads)


def check_gbent_by_counts_odd(f: GBF, threads: int = 1) -> PropertyReport:
    """Same-sign 2^((n-1)/2) jumps at rho -+ 2^(k-3), balanced counts elsewhere; n odd, k >= 3."""
    if f.n % 2 == 0:
        raise InvariantViolation(f"odd-n count criterion called with n={f.n}")
    if f.k < 3:
        raise InvariantViolation(f"odd-n count criterion needs k >= 3, got k={f.k}")
    return _counts_report(f, "counts-odd", odd=True, threads=threads)


def dual_from_counts(report: PropertyReport) -> list[int]:
    """f*(u) = rho if sign = -1, else rho + L, since H(u) = -sign 2^(n/2) zeta^rho."""
    size = coord_count(report.k)
    return [e["rho"] if e["sign"] < 0 else e["rho"] + size for e in report.certificate["rho_sign"]]


def counts_criterion_mask(tables: np.ndarray, n: int, k: int, odd: bool) -> np.ndarray:
    """Count criterion over many vector-domain tables (rows) at once."""
    q, size = 1 << k, coord_count(k)
    x = np.arange(1 << n, dtype=np.int64)
    ip = parity(x[:, None] & x[None, :]) << (k - 1)
    shifted = (tables[:, None, :] + ip[None, :, :]) % q
    counts = np.stack([np.count_nonzero(shifted == rho, axis=2) for rho in range(q)], axis=2)
    diffs = (counts[..., size:] - counts[..., :size]).reshape(-1, size)
    templates, _ = _count_templates(n, k, odd)
    hits = _match_templates(diffs, templates).reshape(tables.shape[0], -1)
    return np.all(hits >= 0, axis=1)


# --- decimation scans -----------------------------------------------------------

def _require_field(f: GBF, name: str):
    if not f.is_field:
        raise InvariantViolation(f"{name} needs a field-domain function")


def _scan_decimations(
    f: GBF,
    name: str,
    check: Callable[[Spectrum], PropertyReport],
    exponents: Optional[list[int]],
    threads: int,
) -> PropertyReport:
    exponents = f.field.coprime_exponents() if exponents is None else sorted(exponents)

    def run(i: int) -> PropertyReport:
        return check(ewht(f, i))

    certificates = {}
    if threads <= 1:
        results = (run(i) for i in exponents)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, exponents))
    for i, report in zip(exponents, results):
        if not report.verdict:
            return PropertyReport(name, False, f.n, f.k, witness={"i": i, **report.witness})
        if "rho" in report.certificate:
            certificates[i] = report.certificate["rho"]
    return PropertyReport(
        name, True, f.n, f.k,
        certificate={"decimations": len(exponents), "duals": certificates},
    )


def is_hyperbent(f: GBF, exponents: Optional[list[int]] = None, threads: int = 1) -> PropertyReport:
    """|W_{f,i}(u)| = 2^(n/2) for all u and every i coprime to 2^n - 1."""
    _require_boolean(f, "hyperbent")
    _require_field(f, "hyperbent")
    if f.n % 2:
        raise InvariantViolation(f"hyperbent functions exist only for even n, got n={f.n}")
    return _scan_decimations(f, "hyperbent", lambda s: _gbent_from_spectrum(s, "hyperbent"), exponents, threads)


def is_ghyperbent(f: GBF, exponents: Optional[list[int]] = None, threads: int = 1) -> PropertyReport:
    """|H_{f,i}(u)| = 2^(n/2) for all u and every i coprime to 2^n - 1."""
    _require_field(f, "ghyperbent")
    return _scan_decimations(f, "ghyperbent", lambda s: _gbent_from_spectrum(s, "ghyperbent"), exponents, threads)


PROPERTY_CHECKS = {
    "bent": lambda f, threads: is_bent(f),
    "semibent": lambda f, threads: is_semibent(f),
    "gbent": lambda f, threads: is_gbent(f, threads=threads),
    "regular": lambda f, threads: is_regular(f, threads=threads),
    "hyperbent": lambda f, threads: is_hyperbent(f, threads=threads),
    "ghyperbent": lambda f, threads: is_ghyperbent(f, threads=threads),
    "counts-even": lambda f, threads: check_gbent_by_counts_even(f, threads),
    "counts-odd": lambda f, threads: check_gbent_by_counts_odd(f, threads),
}


def check_property(f: GBF, name: str, threads: int = 1) -> PropertyReport:
    if name not in PROPERTY_CHECKS:
        raise InvariantViolation(f"unknown property '{name}' (choose from {sorted(PROPERTY_CHECKS)})")
    return PROPERTY_CHECKS[name](f, threads)
