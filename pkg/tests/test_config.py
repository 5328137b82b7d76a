"""Configuration layers and thread budget precedence."""

import pytest

from src.config import (
    THREADS_ENV,
    load_config,
    load_qa_config,
    modulus_overrides,
    parse_poly,
    parse_threads,
    resolve_threads,
)
from src.errors import ConfigError


def test_threads_precedence(monkeypatch):
    config = {"threads": 2}
    assert resolve_threads(None, config) == 2
    monkeypatch.setenv(THREADS_ENV, "3")
    assert resolve_threads(None, config) == 3
    assert resolve_threads(5, config) == 5


def test_threads_default_is_one():
    assert resolve_threads(None, {}) == 1


@pytest.mark.parametrize("value", ["many", "0", "-2", None])
def test_invalid_threads(value):
    with pytest.raises(ConfigError):
        parse_threads(value)


def test_invalid_env_threads(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "lots")
    with pytest.raises(ConfigError):
        resolve_threads(None, {})


def test_missing_config_dir(tmp_path):
    config = load_config(tmp_path)
    assert config["field"] == {"moduli": {}}
    assert config["search"] == {}


def test_shipped_config():
    config = load_config()
    assert config["search"]["max_tables"] > 0
    assert load_qa_config("local")["oracle_max_n"] >= 2
    assert load_qa_config("ci")["oracle_samples"] >= load_qa_config("local")["oracle_samples"]


def test_unknown_qa_mode():
    with pytest.raises(ConfigError):
        load_qa_config("nightly")


def test_parse_poly():
    assert parse_poly("0x13") == 0x13
    assert parse_poly(19) == 19
    with pytest.raises(ConfigError):
        parse_poly("x^4+x+1")


def test_modulus_overrides(tmp_path):
    (tmp_path / "gbentlab.yaml").write_text("field:\n  moduli:\n    4: '0x19'\n")
    assert modulus_overrides(load_config(tmp_path)) == {4: 0x19}
