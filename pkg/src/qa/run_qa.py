"""Acceptance checks for gbentlab.

Run with:
    python -m src.qa.run_qa --mode local
    python -m src.qa.run_qa --mode ci

Checks:
1.  Component path == direct path on random GBFs (both domains)
2.  Parseval, including every decimated spectrum
3.  Every gbent function found or built has one of the three exact forms
4.  Exhaustive bent census at n=4 (896), stable across thread budgets
5.  k=2: a_1 + 2a_2 gbent iff a_2 and a_1 xor a_2 are bent (n=2, exhaustive)
6.  PS_ap samples are g-hyperbent with the predicted dual
7.  coset-U criterion decides g-hyperbentness in both directions
8.  Components of g-hyperbent functions are hyperbent, and the converse
9.  Odd n: every gbent function has semibent components, and the count
    criterion agrees with the spectral definition
10. Split equivalence with sign extraction and exact reassembly
11. Base-2^t components of PS_ap instances, with exact recombination
12. Performance sanity (timings are warnings, disagreement is a failure)

Sample sizes come from config/qa.yaml.
"""

import argparse
import itertools
import sys
import time
from functools import cached_property
from typing import Optional

import numpy as np

from src.algebra.bits import parity
from src.algebra.field import field_for_degree
from src.cli.search import batch_verdicts, iter_table_chunks, run_search
from src.config import load_qa_config, resolve_threads
from src.construct.families import (
    CosetUSpec,
    PsApSpec,
    construct_coset_u,
    construct_ps_ap,
    perturb_coset_u,
    ps_ap_dual,
    sample_coset_u_values,
    sample_ps_ap_g,
)
from src.decomp.theorems import (
    verify_base2t_theorem,
    verify_component_hyperbent_theorem,
    verify_component_semibent_theorem,
    verify_split_k_km1,
)
from src.functions.gbf import GBF, DomainKind, random_gbf
from src.props.checkers import counts_criterion_mask, dual, is_gbent, is_ghyperbent
from src.spectral.transforms import ewht, gwht_direct, gwht_fast_components, parseval_ok, wht_fast

PS_AP_LEVELS = [(2, 1), (2, 2), (2, 3), (3, 3)]
SPLIT_SIZES = [(4, 3), (3, 3), (3, 4)]
EXHAUSTIVE_POOL_LIMIT = 1 << 16


class QAContext:
    """Sample sizes plus functions shared between checks."""

    def __init__(self, qa: dict, seed: int, threads: int):
        self.qa = qa
        self.seed = seed
        self.threads = threads
        self._pools: dict[tuple[int, int], list[np.ndarray]] = {}
        self._assembled: dict[tuple[int, int], list[GBF]] = {}

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])

    @cached_property
    def bent4(self) -> list[list[int]]:
        return run_search("bent", 4, 1, "exhaustive", threads=self.threads).matches

    @cached_property
    def ps_ap(self) -> list[tuple[PsApSpec, GBF]]:
        out = []
        for m, k in PS_AP_LEVELS:
            for i in range(self.qa["ps_ap_samples"]):
                spec = PsApSpec(m, k, sample_ps_ap_g(m, k, seed=self.seed * 7919 + i))
                out.append((spec, construct_ps_ap(spec)))
        return out

    @cached_property
    def coset_u(self) -> list[tuple[CosetUSpec, GBF]]:
        specs = [sample_coset_u_values(2, 3, seed=self.seed * 104729 + i) for i in range(self.qa["coset_u_samples"])]
        return [(spec, construct_coset_u(spec)) for spec in specs]

    def gbent_pool(self, n: int, level: int) -> list[np.ndarray]:
        """Tables of gbent functions V_n -> Z_(2^level)."""
        key = (n, level)
        if key in self._pools:
            return self._pools[key]
        if (1 << (level << n)) <= EXHAUSTIVE_POOL_LIMIT:
            prop = "bent" if level == 1 else "gbent"
            pool = [np.array(t) for t in run_search(prop, n, level, "exhaustive", threads=self.threads).matches]
        elif n == 4 and level == 2:
            # a_1 + 2 a_2 with a_2 and a_1 xor a_2 bent.
            rng = self.rng(42)
            bent = np.array(self.bent4)
            pairs = rng.integers(0, len(bent), size=(256, 2))
            pool = [(bent[i] ^ bent[j]) + 2 * bent[i] for i, j in pairs]
        else:
            # 2h is gbent one level up, and so is any shift by 2^(level-1) (<v,x> + e).
            x = np.arange(1 << n)
            rng = self.rng(43)
            pool = []
            for h in self.gbent_pool(n, level - 1)[:256]:
                v, e = int(rng.integers(0, 1 << n)), int(rng.integers(0, 2))
                affine = (parity(x & v) + e) & 1
                pool.append((2 * h + (affine << (level - 1))) % (1 << level))
        self._pools[key] = pool
        return pool

    def assembled(self, n: int, k: int) -> list[GBF]:
        """f = g + 2h with h gbent at level k-1 and g affine or random."""
        key = (n, k)
        if key in self._assembled:
            return self._assembled[key]
        pool = self.gbent_pool(n, k - 1)
        rng = self.rng(1000 + 10 * n + k)
        x = np.arange(1 << n)
        out = []
        for _ in range(self.qa["split_instances"]):
            h = pool[int(rng.integers(0, len(pool)))]
            if rng.random() < 0.5:
                v, e = int(rng.integers(0, 1 << n)), int(rng.integers(0, 2))
                g = (parity(x & v) + e) & 1
            else:
                g = rng.integers(0, 2, size=1 << n)
            out.append(GBF(n, k, g + 2 * h))
        self._assembled[key] = out
        return out


# --- checks ----------------------------------------------------------------------------------

def _oracle_samples(ctx: QAContext):
    qa = ctx.qa
    rng = ctx.rng(1)
    for n in range(2, qa["oracle_max_n"] + 1):
        field = field_for_degree(n)
        for k in range(1, qa["oracle_max_k"] + 1):
            for domain in (DomainKind.VECTOR, DomainKind.FIELD):
                for _ in range(qa["oracle_samples"]):
                    yield random_gbf(n, k, rng, domain, field)


def check_oracle_equivalence(ctx: QAContext) -> list[str]:
    """Component path and direct path agree exactly."""
    issues = []
    for f in _oracle_samples(ctx):
        if gwht_fast_components(f, ctx.threads) != gwht_direct(f, ctx.threads):
            issues.append(f"component/direct mismatch at n={f.n}, k={f.k}, domain={f.domain.value}: {f.table.tolist()}")
    return issues


def check_parseval(ctx: QAContext) -> list[str]:
    """sum_u |H(u)|^2 = 2^(2n), for plain and decimated spectra."""
    issues = []
    decimated = set()
    for f in _oracle_samples(ctx):
        if not parseval_ok(gwht_fast_components(f, ctx.threads)):
            issues.append(f"Parseval fails at n={f.n}, k={f.k}: {f.table.tolist()}")
        if f.is_field and (f.n, f.k) not in decimated:
            decimated.add((f.n, f.k))
            for i in f.field.coprime_exponents():
                if not parseval_ok(ewht(f, i, ctx.threads)):
                    issues.append(f"Parseval fails for decimation i={i} at n={f.n}, k={f.k}")
    return issues


def check_regularity_forms(ctx: QAContext) -> list[str]:
    """n even and n odd with k >= 3 are regular; n odd with k = 2 is exceptional."""
    issues = []
    functions = [GBF(2, 2, t) for t in ctx.gbent_pool(2, 2)]
    functions += [GBF(3, 2, t) for t in ctx.gbent_pool(3, 2)]
    functions += [GBF(3, 3, t) for t in ctx.gbent_pool(3, 3)[:500]]
    functions += [f for _, f in ctx.ps_ap]
    functions += [f for _, f in ctx.coset_u]
    for f in functions:
        report = is_gbent(f, threads=ctx.threads)
        if not report.verdict:
            issues.append(f"expected gbent at n={f.n}, k={f.k}: {report.witness}")
            continue
        expected = "exceptional" if f.n % 2 and f.k == 2 else "regular"
        if report.certificate.get("form") != expected:
            issues.append(f"form {report.certificate.get('form')} != {expected} at n={f.n}, k={f.k}: {f.table.tolist()}")
    return issues


def check_bent_census(ctx: QAContext) -> list[str]:
    issues = []
    counts = {threads: run_search("bent", 4, 1, "exhaustive", threads=threads).count for threads in (1, max(2, ctx.threads))}
    for threads, count in counts.items():
        if count != 896:
            issues.append(f"bent census at n=4 with {threads} thread(s): {count} (expected 896)")
    return issues


def check_k2_equivalence(ctx: QAContext) -> list[str]:
    """Exhaustive at n=2: a_1 + 2a_2 gbent iff a_2 and a_1 xor a_2 are bent."""
    tables = next(iter_table_chunks(2, 2, "exhaustive", chunk=256))[1]
    a1, a2 = tables & 1, tables >> 1
    gbent = batch_verdicts(tables, 2, 2, "gbent")
    both_bent = batch_verdicts(a2, 2, 1, "bent") & batch_verdicts(a1 ^ a2, 2, 1, "bent")
    return [f"k=2 equivalence fails on {tables[i].tolist()}" for i in np.flatnonzero(gbent != both_bent)]


def check_ps_ap(ctx: QAContext) -> list[str]:
    issues = []
    for spec, f in ctx.ps_ap:
        report = is_ghyperbent(f, threads=ctx.threads)
        if not report.verdict:
            issues.append(f"PS_ap m={spec.half_n}, k={spec.k}, g={list(spec.g_table)} not g-hyperbent: {report.witness}")
            continue
        if dual(f, threads=ctx.threads) != ps_ap_dual(spec):
            issues.append(f"PS_ap m={spec.half_n}, k={spec.k}, g={list(spec.g_table)}: dual differs from formula")
    return issues


def check_coset_u(ctx: QAContext) -> list[str]:
    issues = []
    for i, (spec, f) in enumerate(ctx.coset_u):
        if not is_ghyperbent(f, threads=ctx.threads).verdict:
            issues.append(f"admissible coset-U spec not g-hyperbent: {spec}")
        broken = perturb_coset_u(spec, seed=ctx.seed * 31 + i)
        report = is_ghyperbent(construct_coset_u(broken), threads=ctx.threads)
        if report.verdict or report.witness is None:
            issues.append(f"perturbed coset-U spec misclassified: {broken}")
    return issues


def check_component_hyperbent(ctx: QAContext) -> tuple[list[str], list[str]]:
    issues, warnings = [], []
    for f in [f for _, f in ctx.ps_ap] + [f for _, f in ctx.coset_u]:
        report = verify_component_hyperbent_theorem(f, ctx.threads)
        if not report.holds or not report.clauses[0].verdict:
            issues.append(f"component theorem fails at n={f.n}, k={f.k}: {[c.claim for c in report.failures]}")

    rng = ctx.rng(8)
    field = field_for_degree(4)
    hits = 0
    for _ in range(ctx.qa["converse_samples"]):
        values = tuple(int(v) for v in rng.integers(0, 8, size=5))
        f = construct_coset_u(CosetUSpec(4, 3, int(rng.integers(0, 8)), values), field)
        report = verify_component_hyperbent_theorem(f, ctx.threads)
        if all(c.verdict for c in report.clauses[1:-1]):
            hits += 1
            if not report.clauses[-1].verdict:
                issues.append(f"hyperbent components but f not g-hyperbent: {f.table.tolist()}")
    if hits == 0:
        warnings.append("converse sample produced no function with all components hyperbent")
    return issues, warnings


def check_odd_sweep(ctx: QAContext) -> tuple[list[str], list[str]]:
    """n=3, k=3: gbent implies semibent components; counts criterion agrees with the spectrum."""
    issues, warnings = [], []
    found = 0
    chunks = iter_table_chunks(3, 3, "random", ctx.qa["odd_sweep_samples"], seed=ctx.seed, chunk=4096)
    for _, tables in chunks:
        gbent = batch_verdicts(tables, 3, 3, "gbent")
        by_counts = counts_criterion_mask(tables, 3, 3, odd=True)
        for i in np.flatnonzero(gbent != by_counts):
            issues.append(f"count criterion disagrees with the spectrum on {tables[i].tolist()}")
        hits = tables[gbent]
        found += hits.shape[0]
        if hits.shape[0] == 0:
            continue
        top, a1, a2 = (hits >> 2) & 1, hits & 1, (hits >> 1) & 1
        for c1, c2 in itertools.product((0, 1), repeat=2):
            g = top ^ (c1 * a1) ^ (c2 * a2)
            for i in np.flatnonzero(~batch_verdicts(g, 3, 1, "semibent")):
                issues.append(f"component c=({c1},{c2}) of {hits[i].tolist()} not semibent")

    for f in ctx.assembled(3, 3):
        report = verify_component_semibent_theorem(f, ctx.threads)
        if report.clauses[0].verdict:
            found += 1
            if not report.holds:
                issues.append(f"assembled gbent {f.table.tolist()} has a non-semibent component")
    if found == 0:
        warnings.append("odd sweep found no gbent function")
    return issues, warnings


def check_split_equivalence(ctx: QAContext) -> tuple[list[str], list[str]]:
    issues, warnings = [], []
    for n, k in SPLIT_SIZES:
        positives = 0
        for f in ctx.assembled(n, k):
            report = verify_split_k_km1(f, "iff", ctx.threads)
            positives += report.clauses[0].verdict
            if not report.holds:
                issues.append(f"split equivalence fails at n={n}, k={k}: {[c.claim for c in report.failures]}")
        if positives == 0:
            warnings.append(f"no gbent instance assembled at n={n}, k={k}")
    return issues, warnings


def check_base2t(ctx: QAContext) -> list[str]:
    issues = []
    for i in range(ctx.qa["base2t_samples"]):
        spec = PsApSpec(2, 4, sample_ps_ap_g(2, 4, seed=ctx.seed * 13 + i))
        report = verify_base2t_theorem(construct_ps_ap(spec), 2, ctx.threads)
        if not report.holds or not report.clauses[0].verdict:
            issues.append(f"base-2^2 theorem fails for g={list(spec.g_table)}: {[c.claim for c in report.failures]}")
    return issues


def check_performance(ctx: QAContext) -> tuple[list[str], list[str]]:
    issues, warnings = [], []
    rng = ctx.rng(13)

    n = ctx.qa["perf_n_wht"]
    f = random_gbf(n, 1, rng)
    start = time.perf_counter()
    wht_fast(f)
    elapsed = time.perf_counter() - start
    if elapsed > 1.0:
        warnings.append(f"wht_fast at n={n} took {elapsed:.2f}s (> 1s)")

    n, k = ctx.qa["perf_gwht"]
    f = random_gbf(n, k, rng)
    start = time.perf_counter()
    gwht_fast_components(f, ctx.threads)
    elapsed = time.perf_counter() - start
    if elapsed > 10.0:
        warnings.append(f"gwht_fast_components at n={n}, k={k} took {elapsed:.2f}s (> 10s)")

    f = random_gbf(min(n, 12), k, rng)
    if gwht_fast_components(f, ctx.threads) != gwht_direct(f, ctx.threads):
        issues.append(f"component/direct mismatch at n={f.n}, k={k}")
    return issues, warnings


CHECKS = [
    ("Component path vs direct path", check_oracle_equivalence, "Exact agreement on every sample"),
    ("Parseval (plain and decimated)", check_parseval, "Parseval holds exactly"),
    ("Regularity forms of gbent functions", check_regularity_forms, "Every gbent function has its exact form"),
    ("Bent census at n=4", check_bent_census, "896 bent functions, stable across thread budgets"),
    ("k=2 digit equivalence (n=2, exhaustive)", check_k2_equivalence, "Zero exceptions over 256 tables"),
    ("PS_ap g-hyperbent and dual", check_ps_ap, "Every PS_ap sample is g-hyperbent with the predicted dual"),
    ("coset-U criterion, both directions", check_coset_u, "Zero misclassifications"),
    ("Hyperbent components and converse", check_component_hyperbent, "Components hyperbent; converse holds on samples"),
    ("Odd n: semibent components and count criterion", check_odd_sweep, "Zero exceptions"),
    ("Split equivalence with sign extraction", check_split_equivalence, "Both directions and reassembly verified"),
    ("Base-2^t components (n=4, k=4, t=2)", check_base2t, "Components g-hyperbent; recombination exact"),
    ("Performance sanity", check_performance, "Within time budgets; paths agree"),
]


def run_checks(mode: str, seed: int = 0, threads: Optional[int] = None) -> tuple[list[str], list[str]]:
    ctx = QAContext(load_qa_config(mode), seed, resolve_threads(threads))
    all_issues, all_warnings = [], []
    for number, (title, check, pass_message) in enumerate(CHECKS, start=1):
        print(f"\n[Check {number}] {title}...")
        result = check(ctx)
        issues, warnings = result if isinstance(result, tuple) else (result, [])
        for issue in issues:
            print(f"  FAIL: {issue}")
        for warning in warnings:
            print(f"  WARN: {warning}")
        if not issues and not warnings:
            print(f"  PASS: {pass_message}")
        all_issues.extend(issues)
        all_warnings.extend(warnings)
    return all_issues, all_warnings


def main():
    ap = argparse.ArgumentParser(description="Run gbentlab acceptance checks")
    ap.add_argument("--mode", choices=["ci", "local"], default="local")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()

    print("=" * 60)
    print(f"QA Validation Checks ({args.mode})")
    print("=" * 60)

    all_issues, all_warnings = run_checks(args.mode, args.seed, args.threads)

    print("\n" + "=" * 60)
    if all_issues:
        print(f"QA FAIL: {len(all_issues)} issue(s) found")
        for issue in all_issues[:50]:
            print(f"  - {issue}")
        sys.exit(1)
    print("QA PASS: All checks passed")
    if all_warnings:
        print(f"  (with {len(all_warnings)} warning(s))")
    sys.exit(0)


if __name__ == "__main__":
    main()
