"""Concrete-instance verifiers for the digit decomposition theorems.

A verifier never assumes the statement it checks: it recomputes both
sides and records each claim as a Clause. Clauses marked required must
hold whenever the hypothesis clause holds; a required clause that fails
is a bug alarm. Non-required clauses (hypotheses, converses that are not
theorems in general) are reported as data.
"""

import itertools
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from src.algebra.cyclo import CycloInt, mul_rows, zeta_pow
from src.errors import BudgetExceeded, HypothesisError, InvariantViolation, SignUndefined
from src.functions.gbf import GBF, components_base2t, components_gc, digits, split_low_high
from src.props.checkers import is_bent, is_gbent, is_ghyperbent, is_hyperbent, is_semibent
from src.props.reports import PropertyReport
from src.spectral.transforms import Spectrum, combine_base2t_spectra, gwht

DEFAULT_MAX_COMPONENTS = 1 << 20


@dataclass
class Clause:
    claim: str
    verdict: bool
    witness: Optional[dict] = None
    required: bool = True


@dataclass
class DecompositionReport:
    theorem: str
    n: int
    k: int
    clauses: list[Clause] = field(default_factory=list)
    sign_pattern: Optional[list[int]] = None

    def add(self, claim: str, verdict: bool, witness: Optional[dict] = None, required: bool = True) -> Clause:
        clause = Clause(claim, bool(verdict), witness, required)
        self.clauses.append(clause)
        return clause

    def add_report(self, claim: str, report: PropertyReport, required: bool = True) -> Clause:
        return self.add(claim, report.verdict, report.witness, required)

    @property
    def holds(self) -> bool:
        """True when every required clause is true."""
        return all(c.verdict for c in self.clauses if c.required)

    @property
    def failures(self) -> list[Clause]:
        return [c for c in self.clauses if c.required and not c.verdict]

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["holds"] = self.holds
        return data


def _label(c: Sequence[int]) -> str:
    return "".join(str(x) for x in c) or "-"


def _component_id(f: GBF) -> str:
    """Report id of the component theorem for f's domain and the parity of n."""
    if f.is_field:
        return "thm8" if f.n % 2 else "thm7"
    return "prop2ii" if f.n % 2 else "prop2i"


def _domain_property(f: GBF, threads: int) -> tuple[str, PropertyReport]:
    """g-hyperbent on field domains, gbent on vector domains."""
    if f.is_field:
        return "g-hyperbent", is_ghyperbent(f, threads=threads)
    return "gbent", is_gbent(f, threads=threads)


# --- sign relation and reassembly ---------------------------------------------------

def extract_signs(h_spectrum: Spectrum, h2_spectrum: Spectrum) -> np.ndarray:
    """eps_u with H_h2(u) = eps_u H_h(u); 0 where neither sign fits."""
    zero = ~np.any(h_spectrum.coords, axis=1)
    if np.any(zero):
        raise SignUndefined(f"H_h(u) = 0 at u={int(np.flatnonzero(zero)[0])}")
    plus = np.all(h2_spectrum.coords == h_spectrum.coords, axis=1)
    minus = np.all(h2_spectrum.coords == -h_spectrum.coords, axis=1)
    return np.where(plus, 1, np.where(minus, -1, 0))


def reassemble_from_split(h_spectrum: Spectrum, h2_spectrum: Spectrum) -> Spectrum:
    """H_f from f = g + 2h: 2 H_f = (1 + zeta) H_h + (1 - zeta) H_{h + 2^(k-2) g}."""
    k = h_spectrum.k + 1
    one, z = CycloInt.one(k), zeta_pow(k, 1)
    total = mul_rows(h_spectrum.lift(k).coords, one + z) + mul_rows(h2_spectrum.lift(k).coords, one - z)
    if np.any(total % 2):
        raise InvariantViolation("split reassembly is not divisible by 2")
    return Spectrum(h_spectrum.n, k, total // 2, h_spectrum.domain, h_spectrum.field)


def split_pair(f: GBF, t: int = 1) -> tuple[GBF, GBF, GBF]:
    """(g, h, h + 2^(k-2t) g mod 2^(k-t)) for f = g + 2^t h."""
    g, h = split_low_high(f, t)
    shifted = (h.table + (g.table << (f.k - 2 * t))) % h.modulus
    return g, h, h.with_table(shifted)


# --- component theorems ---------------------------------------------------------------

def verify_component_hyperbent_theorem(f: GBF, threads: int = 1) -> DecompositionReport:
    """n even: f g-hyperbent (gbent on vector domains) iff every g_c is hyperbent (bent)."""
    if f.n % 2:
        raise HypothesisError(f"hyperbent component theorem needs even n, got n={f.n}")
    whole, part = ("g-hyperbent", "hyperbent") if f.is_field else ("gbent", "bent")
    report = DecompositionReport(_component_id(f), f.n, f.k)
    whole_report = is_ghyperbent(f, threads=threads) if f.is_field else is_gbent(f, threads=threads)
    hypothesis = report.add_report(f"hypothesis: f is {whole}", whole_report, required=False).verdict
    verdicts = []
    for c, g in components_gc(f):
        check = is_hyperbent(g, threads=threads) if f.is_field else is_bent(g)
        verdicts.append(check.verdict)
        report.add_report(f"g_{_label(c)} is {part}", check, required=hypothesis)
    converse = hypothesis or not all(verdicts)
    # The converse is a theorem for k <= 2; beyond that it needs conditions on the component duals.
    report.add(
        f"every g_c {part} implies f {whole}",
        converse,
        None if converse else whole_report.witness,
        required=f.k <= 2,
    )
    return report


def verify_component_semibent_theorem(f: GBF, threads: int = 1) -> DecompositionReport:
    """n odd: every component g_c of a gbent f is semibent."""
    if f.n % 2 == 0:
        raise HypothesisError(f"semibent component theorem needs odd n, got n={f.n}")
    report = DecompositionReport(_component_id(f), f.n, f.k)
    hypothesis = report.add_report("hypothesis: f is gbent", is_gbent(f, threads=threads), required=False).verdict
    for c, g in components_gc(f):
        report.add_report(f"g_{_label(c)} is semibent", is_semibent(g), required=hypothesis)
    return report


def verify_component_theorem(f: GBF, threads: int = 1) -> DecompositionReport:
    if f.n % 2 == 0:
        return verify_component_hyperbent_theorem(f, threads)
    return verify_component_semibent_theorem(f, threads)


# --- split theorems ---------------------------------------------------------------------

def verify_split_k_km1(f: GBF, mode: str = "check", threads: int = 1) -> DecompositionReport:
    """f = g + 2h: f gbent iff h and h + 2^(k-2) g are gbent with H_{h+2^(k-2)g} = +-H_h.

    mode="check" verifies the forward direction and the reassembly identity;
    mode="iff" also cross-checks the equivalence against is_gbent(f).
    """
    if f.k < 2:
        raise HypothesisError(f"split needs k >= 2, got k={f.k}")
    if mode not in ("check", "iff"):
        raise HypothesisError(f"unknown split mode '{mode}' (check | iff)")
    regular_case = f.n % 2 == 0 or f.k >= 3
    if mode == "iff" and not regular_case:
        raise HypothesisError(f"equivalence needs n even or k >= 3, got n={f.n}, k={f.k}")

    report = DecompositionReport("cor1" if mode == "iff" else "thm4", f.n, f.k)
    spectrum = gwht(f, threads)
    f_gbent = is_gbent(f, spectrum)
    hypothesis = report.add_report("hypothesis: f is gbent", f_gbent, required=False).verdict

    _, h, h2 = split_pair(f, 1)
    h_spec, h2_spec = gwht(h, threads), gwht(h2, threads)
    h_gbent, h2_gbent = is_gbent(h, h_spec), is_gbent(h2, h2_spec)
    forward = hypothesis and regular_case
    report.add_report("h is gbent", h_gbent, required=forward)
    report.add_report("h + 2^(k-2) g is gbent", h2_gbent, required=forward)

    signs_ok = False
    if h_gbent.verdict:
        signs = extract_signs(h_spec, h2_spec)
        bad = np.flatnonzero(signs == 0)
        signs_ok = bad.size == 0
        report.add(
            "H_{h+2^(k-2)g}(u) = +-H_h(u) for every u",
            signs_ok,
            None if signs_ok else {"u": int(bad[0])},
            required=forward,
        )
        if signs_ok:
            report.sign_pattern = signs.tolist()
    else:
        report.add("H_{h+2^(k-2)g}(u) = +-H_h(u) for every u", False, {"reason": "h is not gbent"}, required=forward)

    rebuilt = reassemble_from_split(h_spec, h2_spec)
    mismatch = np.flatnonzero(np.any(rebuilt.coords != spectrum.coords, axis=1))
    report.add(
        "2 H_f = (1 + zeta) H_h + (1 - zeta) H_{h+2^(k-2)g}",
        mismatch.size == 0,
        None if mismatch.size == 0 else {"u": int(mismatch[0])},
    )

    second = h_gbent.verdict and h2_gbent.verdict and signs_ok
    backward = hypothesis or not second
    report.add("second statement implies f gbent", backward, None if backward else f_gbent.witness)
    if mode == "iff":
        report.add(
            "f gbent iff h, h + 2^(k-2) g gbent with matching signs",
            hypothesis == second,
            None if hypothesis == second else {"f_gbent": hypothesis, "second": second},
        )
    return report


def verify_t_split(f: GBF, t: int, threads: int = 1) -> DecompositionReport:
    """f = g + 2^t h with k >= 2t: h and h + 2^(k-2t) g inherit (g-hyper)bentness at level k - t."""
    if not (t >= 1 and f.k >= 2 * t):
        raise HypothesisError(f"t-split needs k >= 2t >= 2, got k={f.k}, t={t}")
    if f.n % 2 and f.k < 3:
        raise HypothesisError(f"t-split needs n even or k >= 3, got n={f.n}, k={f.k}")
    name, check = _domain_property(f, threads)
    report = DecompositionReport("prop6", f.n, f.k)
    hypothesis = report.add_report(f"hypothesis: f is {name}", check, required=False).verdict
    _, h, h2 = split_pair(f, t)
    report.add_report(f"h is {name} at level 2^{f.k - t}", _domain_property(h, threads)[1], required=hypothesis)
    report.add_report(
        f"h + 2^{f.k - 2 * t} g is {name} at level 2^{f.k - t}",
        _domain_property(h2, threads)[1],
        required=hypothesis,
    )
    return report


# --- recursive components ------------------------------------------------------------------

def recursive_component(f: GBF, s: int, c: Sequence[int]) -> GBF:
    """a_s + 2 a_{s+1} + ... + 2^(k-s-1) a_{k-1} + 2^(k-s) (c_1 a_1 + ... + c_{s-1} a_{s-1} + a_k)."""
    if not 1 <= s <= f.k:
        raise HypothesisError(f"recursive component needs 1 <= s <= k = {f.k}, got s={s}")
    if len(c) != s - 1:
        raise HypothesisError(f"recursive component needs |c| = s - 1 = {s - 1}, got {len(c)}")
    bits = digits(f)
    top = bits[-1].table.copy()
    for ci, a in zip(c, bits):
        if ci & 1:
            top ^= a.table
    level = f.k - s + 1
    table = top << (level - 1)
    for j, a in enumerate(bits[s - 1:f.k - 1]):
        table = table + (a.table << j)
    return f.with_table(table, level)


def verify_recursive_gc(f: GBF, s: int, c: Sequence[int], threads: int = 1) -> DecompositionReport:
    """Recursive component at step s is gbent at level 2^(k-s+1) (semibent for n odd, s = k)."""
    g = recursive_component(f, s, c)
    report = DecompositionReport("recursive", f.n, f.k)
    hypothesis = report.add_report("hypothesis: f is gbent", is_gbent(f, threads=threads), required=False).verdict
    if f.n % 2 and s == f.k:
        report.add_report(f"g_{_label(c)} is semibent", is_semibent(g), required=hypothesis)
    else:
        report.add_report(f"g_{_label(c)} is gbent at level 2^{g.k}", is_gbent(g, threads=threads), required=hypothesis)

    # Siblings (c', 0) and (c', 1) are the two halves of the parent split at level 2^(k-s+2).
    if s >= 2 and (f.n % 2 == 0 or f.k - s + 2 >= 3):
        parent = tuple(c[:-1])
        low = gwht(recursive_component(f, s, parent + (0,)), threads)
        high = gwht(recursive_component(f, s, parent + (1,)), threads)
        try:
            signs = extract_signs(low, high)
        except SignUndefined as e:
            report.add("sibling components satisfy H_1 = +-H_0", False, {"reason": str(e)}, required=hypothesis)
        else:
            bad = np.flatnonzero(signs == 0)
            report.add(
                "sibling components satisfy H_1 = +-H_0",
                bad.size == 0,
                None if bad.size == 0 else {"u": int(bad[0])},
                required=hypothesis,
            )
            if bad.size == 0:
                report.sign_pattern = signs.tolist()
    return report


# --- base-2^t components ----------------------------------------------------------------------

def verify_base2t_theorem(
    f: GBF,
    t: int,
    threads: int = 1,
    max_components: int = DEFAULT_MAX_COMPONENTS,
) -> DecompositionReport:
    """Every base-2^t component is g-hyperbent (gbent) at level 2^t, and the components recombine to H_f."""
    if t < 1 or f.k % t:
        raise HypothesisError(f"block width t={t} must divide k={f.k}")
    if f.n % 2 and t < 2:
        raise HypothesisError(f"base-2^t theorem needs n even or t >= 2, got n={f.n}, t={t}")
    count = 1 << (t * (f.k // t - 1))
    if count > max_components:
        raise BudgetExceeded(f"{count} components exceed the budget of {max_components}")

    name, check = _domain_property(f, threads)
    report = DecompositionReport("base2t", f.n, f.k)
    hypothesis = report.add_report(f"hypothesis: f is {name}", check, required=False).verdict
    parts = components_base2t(f, t)
    spectra = []
    for c, g in parts:
        spectrum = gwht(g, threads)
        spectra.append(spectrum)
        component = is_gbent(g, spectrum) if not g.is_field else is_ghyperbent(g, threads=threads)
        report.add_report(f"g_{_label(c)} is {name} at level 2^{t}", component, required=hypothesis)

    combined = combine_base2t_spectra(spectra, t, f.k)
    reference = gwht(f, threads)
    mismatch = np.flatnonzero(np.any(combined.coords != reference.coords, axis=1))
    report.add(
        "component spectra recombine to H_f",
        mismatch.size == 0,
        None if mismatch.size == 0 else {"u": int(mismatch[0])},
    )
    return report


THEOREMS = ("prop2", "thm4", "thm7", "thm8", "prop6", "cor1", "recursive", "base2t")
THEOREM_ALIASES = {"components": "prop2", "split": "thm4", "split-iff": "cor1", "t-split": "prop6"}


def all_recursive_vectors(s: int) -> list[tuple[int, ...]]:
    return list(itertools.product((0, 1), repeat=s - 1))


def verify_theorem(
    f: GBF,
    theorem: str,
    t: Optional[int] = None,
    s: Optional[int] = None,
    c: Optional[Sequence[int]] = None,
    threads: int = 1,
    max_components: int = DEFAULT_MAX_COMPONENTS,
) -> list[DecompositionReport]:
    """Dispatch by theorem id or alias; the recursive check runs over every c when none is given."""
    theorem = THEOREM_ALIASES.get(theorem, theorem)
    if theorem == "prop2":
        return [verify_component_theorem(f, threads)]
    if theorem == "thm7":
        return [verify_component_hyperbent_theorem(f, threads)]
    if theorem == "thm8":
        return [verify_component_semibent_theorem(f, threads)]
    if theorem in ("thm4", "cor1"):
        return [verify_split_k_km1(f, "iff" if theorem == "cor1" else "check", threads)]
    if theorem == "prop6":
        return [verify_t_split(f, t or 1, threads)]
    if theorem == "recursive":
        if s is None:
            raise HypothesisError("recursive check needs --s")
        vectors = [tuple(c)] if c is not None else all_recursive_vectors(s)
        return [verify_recursive_gc(f, s, v, threads) for v in vectors]
    if theorem == "base2t":
        return [verify_base2t_theorem(f, t or 1, threads, max_components)]
    names = list(THEOREMS) + list(THEOREM_ALIASES)
    raise HypothesisError(f"unknown theorem '{theorem}' (choose from {', '.join(names)})")
