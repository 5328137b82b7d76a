"""Exhaustive and random searches over truth tables.

Tables are evaluated in chunks. For bent, semibent and gbent the chunk is
transformed as one batch (one butterfly over every component column of
every table); every other property falls back to check_property per table.
Chunks are generated sequentially from one seeded generator, so results
do not depend on the thread budget.
"""

import itertools
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from src.algebra.cyclo import norm_sq_rows
from src.algebra.field import FieldCtx, field_for_degree, get_field
from src.cli.commands import banner, emit, log
from src.config import parse_poly
from src.errors import BudgetExceeded, InvariantViolation, ParseError
from src.functions.gbf import GBF, DomainKind
from src.props.checkers import PROPERTY_CHECKS, check_property
from src.spectral.transforms import check_int64_range, fwht_columns, vandermonde_weight

BATCH_PROPERTIES = ("bent", "semibent", "gbent")
SEARCH_MODES = ("exhaustive", "random")


@dataclass
class SearchResult:
    property: str
    n: int
    k: int
    mode: str
    scanned: int = 0
    count: int = 0
    matches: list = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "property": self.property,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "scanned": self.scanned,
            "count": self.count,
        }


def table_budget(n: int, k: int, mode: str, samples: int) -> int:
    """Tables a search would visit: 2^(k 2^n) exhaustively, else the sample count."""
    if mode == "exhaustive":
        return 1 << (k << n)
    if mode == "random":
        return samples
    raise ParseError(f"unknown search mode '{mode}' (exhaustive | random)")


def iter_table_chunks(
    n: int,
    k: int,
    mode: str,
    samples: int = 0,
    seed: Optional[int] = None,
    chunk: int = 4096,
    max_tables: Optional[int] = None,
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (first index, tables) with tables of shape (rows, 2^n)."""
    total = table_budget(n, k, mode, samples)
    if max_tables is not None and total > max_tables:
        raise BudgetExceeded(f"{mode} search over {total} tables exceeds the budget of {max_tables}")
    size, mask = 1 << n, (1 << k) - 1
    rng = np.random.default_rng(seed)
    shifts = k * np.arange(size, dtype=np.int64)
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        if mode == "exhaustive":
            idx = np.arange(lo, hi, dtype=np.int64)
            tables = (idx[:, None] >> shifts[None, :]) & mask
        else:
            tables = rng.integers(0, mask + 1, size=(hi - lo, size), dtype=np.int64)
        yield lo, tables


def batch_spectra(tables: np.ndarray, n: int, k: int, ctx: Optional[FieldCtx] = None) -> np.ndarray:
    """Exact spectra of many tables at once, shape (2^n, rows, 2^(k-1))."""
    check_int64_range(n, k)
    columns = tables.T
    if k == 1:
        walsh = fwht_columns(1 - 2 * columns)
        coords = walsh[:, :, None]
    else:
        top = (columns >> (k - 1)) & 1
        digit = [(columns >> i) & 1 for i in range(k - 1)]
        vectors = list(itertools.product((0, 1), repeat=k - 1))
        comps = []
        for c in vectors:
            g = top.copy()
            for i, ci in enumerate(c):
                if ci:
                    g ^= digit[i]
            comps.append(g)
        walsh = fwht_columns(1 - 2 * np.stack(comps, axis=2))
        weights = np.array([vandermonde_weight(c, 1, k).coords for c in vectors], dtype=np.int64)
        coords = walsh @ weights
        if np.any(coords % (1 << (k - 1))):
            raise InvariantViolation("batched component recombination is not exact")
        coords = coords >> (k - 1)
    if ctx is not None:
        coords = coords[ctx.inner_product_map]
    return coords


def batch_verdicts(
    tables: np.ndarray,
    n: int,
    k: int,
    prop: str,
    ctx: Optional[FieldCtx] = None,
) -> np.ndarray:
    """Boolean mask of tables with the property."""
    if prop in ("bent", "semibent"):
        if k != 1:
            raise InvariantViolation(f"{prop} needs a Boolean function (k=1), got k={k}")
        if prop == "bent" and n % 2:
            raise InvariantViolation(f"bent functions exist only for even n, got n={n}")
        if prop == "semibent" and n % 2 == 0:
            raise InvariantViolation(f"semibent is defined here for odd n, got n={n}")
    if prop in BATCH_PROPERTIES:
        coords = batch_spectra(tables, n, k, ctx)
        if prop == "semibent":
            walsh = np.abs(coords[..., 0])
            return np.all((walsh == 0) | (walsh == 1 << ((n + 1) // 2)), axis=0)
        norms = norm_sq_rows(coords, k)
        flat = (norms[..., 0] == 1 << n) & ~np.any(norms[..., 1:], axis=-1)
        return np.all(flat, axis=0)

    domain = DomainKind.FIELD if ctx is not None else DomainKind.VECTOR
    return np.array(
        [check_property(GBF(n, k, row, domain, ctx), prop).verdict for row in tables],
        dtype=bool,
    )


def search_field(n: int, domain: str, poly: Optional[str], config: Optional[dict]) -> Optional[FieldCtx]:
    if domain == DomainKind.VECTOR.value:
        return None
    if domain != DomainKind.FIELD.value:
        raise ParseError(f"unknown domain '{domain}' (vector | field)")
    if poly is not None:
        return get_field(n, parse_poly(poly))
    return field_for_degree(n, config)


def run_search(
    prop: str,
    n: int,
    k: int,
    mode: str = "exhaustive",
    samples: int = 0,
    seed: Optional[int] = None,
    ctx: Optional[FieldCtx] = None,
    threads: int = 1,
    chunk: int = 4096,
    max_tables: Optional[int] = None,
    on_match=None,
    keep_matches: bool = True,
) -> SearchResult:
    """Scan tables for `prop`; on_match(index, table) is called in scan order."""
    if prop not in PROPERTY_CHECKS:
        raise InvariantViolation(f"unknown property '{prop}' (choose from {sorted(PROPERTY_CHECKS)})")
    result = SearchResult(prop, n, k, mode)
    chunks = iter_table_chunks(n, k, mode, samples, seed, chunk, max_tables)

    def evaluate(item: tuple[int, np.ndarray]) -> tuple[int, np.ndarray, np.ndarray]:
        lo, tables = item
        return lo, tables, batch_verdicts(tables, n, k, prop, ctx)

    def consume(lo: int, tables: np.ndarray, mask: np.ndarray):
        result.scanned += tables.shape[0]
        for offset in np.flatnonzero(mask):
            table = tables[offset]
            result.count += 1
            if keep_matches:
                result.matches.append(table.tolist())
            if on_match is not None:
                on_match(lo + int(offset), table)

    if threads <= 1:
        for item in chunks:
            consume(*evaluate(item))
        return result

    with ThreadPoolExecutor(max_workers=threads) as pool:
        while True:
            group = list(itertools.islice(chunks, threads))
            if not group:
                break
            for outcome in pool.map(evaluate, group):
                consume(*outcome)
    return result


def cmd_search(cfg) -> int:
    prop = cfg.option("property", "gbent")
    n, k = int(cfg.option("n", 2)), int(cfg.option("k", 1))
    mode = cfg.option("mode", "exhaustive")
    samples = int(cfg.option("samples", 0))
    count_only = bool(cfg.option("count_only", False))
    search = cfg.config["search"]
    ctx = search_field(n, cfg.option("domain", "vector"), cfg.option("poly"), cfg.config)
    banner(cfg, f"Search {prop}: n={n}, k={k}, mode={mode}")

    def stream(index: int, table: np.ndarray):
        if count_only:
            return
        if cfg.fmt == "text":
            print(" ".join(str(int(v)) for v in table))
        else:
            emit(cfg, {"index": index, "table": table.tolist()})
        sys.stdout.flush()

    result = run_search(
        prop, n, k, mode, samples, cfg.seed, ctx,
        threads=cfg.threads,
        chunk=int(search.get("chunk", 4096)),
        max_tables=int(search.get("max_tables", 1 << 24)),
        on_match=stream,
        keep_matches=False,
    )
    log(cfg, f"  scanned {result.scanned}, matched {result.count}")
    if cfg.fmt == "text":
        print(f"count: {result.count} scanned: {result.scanned}")
    else:
        emit(cfg, result.summary())
    return 0

