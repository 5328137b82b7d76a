"""
gbentlab command-line interface.

Usage:
    python -m src.cli.main spectrum  --input f.json [--decimation all|none|i,j,..]
    python -m src.cli.main check     --input f.json --property gbent
    python -m src.cli.main construct --family ps-ap --m 2 --k 3 --seed 7
    python -m src.cli.main decompose --input f.json --theorem thm4
    python -m src.cli.main search    --property bent --n 4 --k 1 --mode exhaustive
    python -m src.cli.main bench     [--n 12 --k 3]

Exit codes: 0 ok, 2 parse/config error, 3 invariant violation,
4 budget exceeded, 5 path disagreement.
"""

import argparse
import sys

from src.cli.commands import (
    build_run_config,
    cmd_bench,
    cmd_check,
    cmd_construct,
    cmd_decompose,
    cmd_spectrum,
)
from src.cli.search import SEARCH_MODES, cmd_search
from src.decomp.theorems import THEOREM_ALIASES, THEOREMS
from src.errors import GbentLabError
from src.props.checkers import PROPERTY_CHECKS

COMMANDS = {
    "spectrum": cmd_spectrum,
    "check": cmd_check,
    "construct": cmd_construct,
    "decompose": cmd_decompose,
    "search": cmd_search,
    "bench": cmd_bench,
}


def _common(parser: argparse.ArgumentParser, with_input: bool = False):
    if with_input:
        parser.add_argument("--input", help="Function file (JSON or text format)")
        parser.add_argument("--inline", help="Function given as an inline JSON object")
    parser.add_argument("--format", default="json", choices=["json", "text"], help="Output format")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads (overrides GBENTLAB_THREADS)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for random sampling")
    parser.add_argument("--quiet", action="store_true", help="Suppress progress output on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbentlab", description="Exact toolkit for generalized Boolean functions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="Generalized (or extended) Walsh-Hadamard spectrum")
    _common(p, with_input=True)
    p.add_argument("--decimation", default="none", help="none | all | comma-separated exponents")
    p.add_argument("--check-paths", action="store_true", help="Cross-check the component path against the direct sum")

    p = sub.add_parser("check", help="Check one spectral property")
    _common(p, with_input=True)
    p.add_argument("--property", default="gbent", choices=sorted(PROPERTY_CHECKS))

    p = sub.add_parser("construct", help="Build a g-hyperbent family member on GF(2^(2m))")
    _common(p)
    p.add_argument("--family", default="ps-ap", choices=["ps-ap", "coset-u"])
    p.add_argument("--m", type=int, default=2, help="Half degree m (n = 2m)")
    p.add_argument("--k", type=int, default=3, help="Level: values in Z_(2^k)")
    p.add_argument("--g-table", dest="g_table", help="PS_ap: g values on the subfield, by rank")
    p.add_argument("--sampler", default="pairs", choices=["pairs", "rejection"], help="PS_ap: how to sample g")
    p.add_argument("--u-values", dest="u_values", help="coset-U: values on U, by index")
    p.add_argument("--f0", type=int, default=None, help="coset-U: f(0)")

    p = sub.add_parser("decompose", help="Verify a decomposition theorem on one function")
    _common(p, with_input=True)
    p.add_argument("--theorem", default="prop2", choices=list(THEOREMS) + list(THEOREM_ALIASES))
    p.add_argument("--t", type=int, default=None, help="Split point or block width")
    p.add_argument("--s", type=int, default=None, help="Recursion depth")
    p.add_argument("--c", default=None, help="Recursive component vector, comma-separated bits")

    p = sub.add_parser("search", help="Search truth tables for a property")
    _common(p)
    p.add_argument("--property", default="gbent", choices=sorted(PROPERTY_CHECKS))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--mode", default="exhaustive", choices=list(SEARCH_MODES))
    p.add_argument("--samples", type=int, default=0, help="Random mode: tables to draw")
    p.add_argument("--domain", default="vector", choices=["vector", "field"])
    p.add_argument("--poly", default=None, help="Field modulus (hex), field domain only")
    p.add_argument("--count-only", dest="count_only", action="store_true", help="Print only the final count")

    p = sub.add_parser("bench", help="Time and cross-check the transform paths")
    _common(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    return parser


def run_command(args) -> int:
    """Run one subcommand; gbentlab errors become their exit codes."""
    try:
        cfg = build_run_config(args)
        return COMMANDS[args.command](cfg)
    except GbentLabError as exc:
        print(f"ERROR ({type(exc).__name__}): {exc}", file=sys.stderr)
        return exc.exit_code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run_command(args)


if __name__ == "__main__":
    sys.exit(main())
