"""Subcommand implementations for the gbentlab CLI.

Each cmd_* takes a resolved RunConfig and returns an exit code. Results
go to stdout (JSON by default, a pandas table with --format text);
progress banners go to stderr so stdout stays machine-readable.
"""

import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from src.config import load_config, resolve_threads
from src.construct.families import (
    CosetUSpec,
    PsApSpec,
    check_coset_u_criterion,
    construct_coset_u,
    construct_ps_ap,
    coset_u_sum,
    sample_coset_u_values,
    sample_ps_ap_g,
)
from src.decomp.theorems import DEFAULT_MAX_COMPONENTS, verify_theorem
from src.errors import InvariantViolation, ParseError, PathDisagreement
from src.functions.formats import gbf_from_json, gbf_to_dict, gbf_to_text, load_gbf
from src.functions.gbf import GBF, random_gbf
from src.props.checkers import check_property
from src.spectral.transforms import Spectrum, ewht, gwht, gwht_direct, gwht_fast_components, wht_fast

INPUT_COMMANDS = ("spectrum", "check", "decompose")


@dataclass
class RunConfig:
    """Resolved view of CLI flags, environment and config/gbentlab.yaml."""

    subcommand: str
    input_path: Optional[Path] = None
    inline: Optional[str] = None
    fmt: str = "json"
    decimation: str = "none"
    threads: int = 1
    seed: Optional[int] = None
    quiet: bool = False
    options: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)

    def validate(self):
        if self.fmt not in ("json", "text"):
            raise ParseError(f"unknown output format '{self.fmt}' (json | text)")
        if self.threads < 1:
            raise ParseError(f"thread budget must be >= 1, got {self.threads}")
        if self.subcommand in INPUT_COMMANDS:
            sources = (self.input_path is not None) + (self.inline is not None)
            if sources != 1:
                raise ParseError(f"'{self.subcommand}' needs exactly one of --input or --inline")

    def load_function(self) -> GBF:
        if self.input_path is not None:
            return load_gbf(self.input_path, self.config)
        return gbf_from_json(self.inline, self.config)

    def option(self, name: str, default=None):
        value = self.options.get(name)
        return default if value is None else value


def build_run_config(args) -> RunConfig:
    config = load_config()
    options = {
        key: value for key, value in vars(args).items()
        if key not in ("command", "input", "inline", "format", "decimation", "threads", "seed", "quiet")
    }
    cfg = RunConfig(
        subcommand=args.command,
        input_path=Path(args.input) if getattr(args, "input", None) else None,
        inline=getattr(args, "inline", None),
        fmt=getattr(args, "format", "json"),
        decimation=getattr(args, "decimation", "none") or "none",
        threads=resolve_threads(getattr(args, "threads", None), config),
        seed=getattr(args, "seed", None),
        quiet=getattr(args, "quiet", False),
        options=options,
        config=config,
    )
    cfg.validate()
    return cfg


# --- output helpers ---------------------------------------------------------------

def banner(cfg: RunConfig, title: str):
    if cfg.quiet:
        return
    print("=" * 60, file=sys.stderr)
    print(title, file=sys.stderr)
    print("=" * 60, file=sys.stderr)


def log(cfg: RunConfig, message: str):
    if not cfg.quiet:
        print(message, file=sys.stderr)


def emit(cfg: RunConfig, payload, table: Optional[pd.DataFrame] = None):
    """JSON payload to stdout, or the table rendering with --format text."""
    if cfg.fmt == "text" and table is not None:
        print(table.to_string(index=False))
    else:
        print(json.dumps(payload, default=_json_default))


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def _parse_int_list(text: Optional[str], name: str) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise ParseError(f"--{name} must be a comma-separated list of integers, got {text!r}")


def decimation_exponents(cfg: RunConfig, f: GBF) -> Optional[list[int]]:
    """None for --decimation none, all coprime exponents for 'all', else the listed ones."""
    policy = cfg.decimation
    if policy == "none":
        return None
    if not f.is_field:
        raise InvariantViolation("decimation needs a field-domain function")
    if policy == "all":
        return f.field.coprime_exponents()
    return _parse_int_list(policy, "decimation")


def spectrum_table(spectrum: Spectrum) -> pd.DataFrame:
    values = spectrum.to_complex()
    norms = spectrum.norm_sq_coords()
    return pd.DataFrame({
        "u": np.arange(len(spectrum)),
        "coords": [" ".join(str(int(x)) for x in row) for row in spectrum.coords],
        "norm_sq": [int(r[0]) if not np.any(r[1:]) else str(list(r)) for r in norms],
        "re": np.round(values.real, 6),
        "im": np.round(values.imag, 6),
    })


# --- subcommands ------------------------------------------------------------------

def cmd_spectrum(cfg: RunConfig) -> int:
    f = cfg.load_function()
    banner(cfg, f"Spectrum: n={f.n}, k={f.k}, domain={f.domain.value}")
    exponents = decimation_exponents(cfg, f)
    if exponents is None:
        log(cfg, "\n[Step 1] Generalized transform (component path)...")
        spectrum = gwht(f, cfg.threads, check_paths=bool(cfg.option("check_paths", False)))
        emit(cfg, {"function": gbf_to_dict(f), "spectrum": spectrum.to_json()}, spectrum_table(spectrum))
        return 0

    log(cfg, f"\n[Step 1] Extended transforms over {len(exponents)} decimation(s)...")
    spectra = {i: ewht(f, i, cfg.threads) for i in exponents}
    if cfg.fmt == "text":
        for i, spectrum in spectra.items():
            print(f"# i = {i}")
            print(spectrum_table(spectrum).to_string(index=False))
        return 0
    emit(cfg, {
        "function": gbf_to_dict(f),
        "decimations": [{"i": i, "spectrum": s.to_json()} for i, s in spectra.items()],
    })
    return 0


def cmd_check(cfg: RunConfig) -> int:
    f = cfg.load_function()
    name = cfg.option("property", "gbent")
    banner(cfg, f"Check {name}: n={f.n}, k={f.k}, domain={f.domain.value}")
    report = check_property(f, name, cfg.threads)
    log(cfg, f"  {report.summary()}")
    table = pd.DataFrame([{
        "property": report.property,
        "verdict": report.verdict,
        "witness": report.witness or "",
    }])
    emit(cfg, report.to_dict(), table)
    return 0


def cmd_construct(cfg: RunConfig) -> int:
    family = cfg.option("family", "ps-ap")
    m, k = int(cfg.option("m", 2)), int(cfg.option("k", 3))
    banner(cfg, f"Construct {family}: m={m}, k={k}, seed={cfg.seed}")

    if family == "ps-ap":
        g_table = _parse_int_list(cfg.option("g_table"), "g-table")
        if g_table is None:
            mode = cfg.option("sampler", "pairs")
            tries = int(cfg.config["construct"].get("rejection_tries", 100_000))
            g_table = sample_ps_ap_g(m, k, cfg.seed, mode=mode, tries=tries)
            log(cfg, f"  Sampled g ({mode}): {list(g_table)}")
        f = construct_ps_ap(PsApSpec(half_n=m, k=k, g_table=tuple(g_table)))
    elif family == "coset-u":
        values = _parse_int_list(cfg.option("u_values"), "u-values")
        if values is None:
            spec = sample_coset_u_values(m, k, cfg.seed, cfg.option("f0"))
        else:
            spec = CosetUSpec(n=2 * m, k=k, f0=int(cfg.option("f0", 0)), u_values=tuple(values))
        holds = check_coset_u_criterion(spec)
        log(cfg, f"  sum over U = {coset_u_sum(spec)}; criterion {'holds' if holds else 'FAILS'}")
        f = construct_coset_u(spec)
    else:
        raise ParseError(f"unknown family '{family}' (ps-ap | coset-u)")

    if cfg.fmt == "text":
        sys.stdout.write(gbf_to_text(f))
    else:
        emit(cfg, gbf_to_dict(f))
    return 0


def cmd_decompose(cfg: RunConfig) -> int:
    f = cfg.load_function()
    theorem = cfg.option("theorem", "prop2")
    banner(cfg, f"Decompose ({theorem}): n={f.n}, k={f.k}, domain={f.domain.value}")
    c = _parse_int_list(cfg.option("c"), "c")
    reports = verify_theorem(
        f,
        theorem,
        t=cfg.option("t"),
        s=cfg.option("s"),
        c=c,
        threads=cfg.threads,
        max_components=int(cfg.config["decomp"].get("max_components", DEFAULT_MAX_COMPONENTS)),
    )
    rows = []
    for report in reports:
        for clause in report.clauses:
            status = "PASS" if clause.verdict else ("FAIL" if clause.required else "no")
            log(cfg, f"  {status}: {clause.claim}")
            rows.append({"theorem": report.theorem, "claim": clause.claim, "verdict": clause.verdict, "required": clause.required})
    emit(cfg, [r.to_dict() for r in reports], pd.DataFrame(rows))
    failed = [c.claim for r in reports for c in r.failures]
    if failed:
        raise PathDisagreement(f"required clause(s) failed: {failed}")
    return 0


def cmd_bench(cfg: RunConfig) -> int:
    """Time the transform paths and require exact agreement wherever both run."""
    bench = cfg.config["bench"]
    sizes = bench.get("sizes") or [[8, 1], [10, 3], [12, 3]]
    if cfg.option("n") is not None:
        sizes = [[int(cfg.option("n")), int(cfg.option("k", 1))]]
    direct_max_n = int(bench.get("direct_max_n", 12))
    repeats = max(1, int(bench.get("repeats", 1)))
    rng = np.random.default_rng(cfg.seed)
    banner(cfg, f"Benchmark: {len(sizes)} size(s), threads={cfg.threads}")

    rows = []
    for n, k in sizes:
        f = random_gbf(n, k, rng)
        log(cfg, f"\n[n={n}, k={k}]")
        paths = {"components": lambda: gwht_fast_components(f, cfg.threads)}
        if k == 1:
            paths["wht_fast"] = lambda: wht_fast(f)
        if n <= direct_max_n:
            paths["direct"] = lambda: gwht_direct(f, cfg.threads)
        results = {}
        for name, run in paths.items():
            start = time.perf_counter()
            for _ in range(repeats):
                results[name] = run()
            elapsed = (time.perf_counter() - start) / repeats
            rows.append({"n": n, "k": k, "path": name, "seconds": round(elapsed, 6)})
            log(cfg, f"  {name}: {elapsed:.4f}s")
        reference = results["components"]
        for name, spectrum in results.items():
            if spectrum != reference:
                raise PathDisagreement(f"{name} disagrees with the component path at n={n}, k={k}")
        for row in rows:
            if row["n"] == n and row["k"] == k:
                row["agree"] = True
    emit(cfg, rows, pd.DataFrame(rows))
    return 0
