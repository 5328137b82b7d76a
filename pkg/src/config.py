"""Configuration loading for gbentlab.

Settings come from three layers, later layers winning:

1. config/gbentlab.yaml (and config/qa.yaml for the acceptance harness)
2. environment (GBENTLAB_THREADS), with a .env file loaded on import
3. explicit arguments (CLI flags)
"""

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from src.errors import ConfigError

load_dotenv()

CONFIG_DIR = Path(__file__).resolve().parent.parent / "config"
THREADS_ENV = "GBENTLAB_THREADS"


def _read_yaml(path: Path) -> dict:
    if not path.exists():
        return {}
    with open(path) as f:
        data = yaml.safe_load(f)
    return data or {}


def load_config(config_dir: Optional[Path] = None) -> dict:
    """Load config/gbentlab.yaml, falling back to empty sections."""
    data = _read_yaml((config_dir or CONFIG_DIR) / "gbentlab.yaml")
    for section in ("field", "search", "bench", "decomp", "construct"):
        data.setdefault(section, {})
    data["field"].setdefault("moduli", {})
    return data


def load_qa_config(mode: str, config_dir: Optional[Path] = None) -> dict:
    """Load the sample sizes for one QA mode (local | ci)."""
    data = _read_yaml((config_dir or CONFIG_DIR) / "qa.yaml")
    if mode not in data:
        raise ConfigError(f"config/qa.yaml has no '{mode}' section")
    return data[mode]


def parse_threads(value) -> int:
    """Validate a thread budget coming from YAML, env or CLI."""
    try:
        threads = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"thread budget must be an integer, got {value!r}")
    if threads < 1:
        raise ConfigError(f"thread budget must be >= 1, got {threads}")
    return threads


def resolve_threads(cli_value: Optional[int] = None, config: Optional[dict] = None) -> int:
    """Thread budget: CLI flag, else GBENTLAB_THREADS, else YAML `threads`, else 1."""
    if cli_value is not None:
        return parse_threads(cli_value)
    env_value = os.getenv(THREADS_ENV)
    if env_value:
        return parse_threads(env_value)
    config = config if config is not None else load_config()
    return parse_threads(config.get("threads", 1))


def modulus_overrides(config: Optional[dict] = None) -> dict[int, int]:
    """Per-degree modulus overrides from the `field.moduli` section."""
    config = config if config is not None else load_config()
    overrides = {}
    for degree, poly in (config["field"].get("moduli") or {}).items():
        overrides[int(degree)] = parse_poly(poly)
    return overrides


def parse_poly(text) -> int:
    """Parse a hex-encoded polynomial such as '0x13' (x^4 + x + 1)."""
    if isinstance(text, int):
        return text
    try:
        return int(str(text), 16)
    except ValueError:
        raise ConfigError(f"modulus must be hex-encoded (e.g. 0x13), got {text!r}")
