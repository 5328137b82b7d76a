"""Reading and writing GBF files.

Two formats:

- JSON: {"n": 4, "k": 3, "domain": "field", "poly": "0x13", "table": [...]}
- text: a header line `gbf n k domain [poly]` followed by 2^n
  whitespace-separated values (line breaks anywhere, `#` starts a comment)
"""

import json
from pathlib import Path
from typing import Optional, Union

from src.algebra.field import field_for_degree, get_field
from src.config import parse_poly
from src.errors import ConfigError, ParseError
from src.functions.gbf import GBF, DomainKind


def _build(n, k, domain: str, poly: Optional[str], table, config: Optional[dict] = None) -> GBF:
    try:
        n, k = int(n), int(k)
        kind = DomainKind(domain)
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad GBF header: {e}")
    field = None
    if kind is DomainKind.FIELD:
        try:
            field = get_field(n, parse_poly(poly)) if poly else field_for_degree(n, config)
        except ConfigError as e:
            raise ParseError(str(e))
    try:
        values = [int(v) for v in table]
    except (TypeError, ValueError) as e:
        raise ParseError(f"table values must be integers: {e}")
    return GBF(n, k, values, kind, field)


def gbf_to_dict(f: GBF) -> dict:
    data = {"n": f.n, "k": f.k, "domain": f.domain.value}
    if f.is_field:
        data["poly"] = f.field.poly_hex
    data["table"] = [int(v) for v in f.table]
    return data


def gbf_from_dict(data: dict, config: Optional[dict] = None) -> GBF:
    if not isinstance(data, dict):
        raise ParseError("GBF JSON must be an object")
    missing = [key for key in ("n", "k", "table") if key not in data]
    if missing:
        raise ParseError(f"GBF JSON missing keys: {missing}")
    return _build(data["n"], data["k"], data.get("domain", "vector"), data.get("poly"), data["table"], config)


def gbf_to_json(f: GBF) -> str:
    return json.dumps(gbf_to_dict(f))


def gbf_from_json(text: str, config: Optional[dict] = None) -> GBF:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")
    return gbf_from_dict(data, config)


def gbf_to_text(f: GBF, per_line: int = 16) -> str:
    header = f"gbf {f.n} {f.k} {f.domain.value}"
    if f.is_field:
        header += f" {f.field.poly_hex}"
    values = [str(int(v)) for v in f.table]
    rows = [" ".join(values[i:i + per_line]) for i in range(0, len(values), per_line)]
    return "\n".join([header] + rows) + "\n"


def gbf_from_text(text: str, config: Optional[dict] = None) -> GBF:
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if len(tokens) < 4 or tokens[0] != "gbf":
        raise ParseError("text format must start with `gbf n k domain [poly]`")
    n, k, domain = tokens[1:4]
    rest = tokens[4:]
    poly = None
    if rest and rest[0].lower().startswith("0x"):
        poly, rest = rest[0], rest[1:]
    return _build(n, k, domain, poly, rest, config)


def load_gbf(path: Union[str, Path], config: Optional[dict] = None) -> GBF:
    """Load a GBF from a .json or text file (format detected from content)."""
    path = Path(path)
    if not path.exists():
        raise ParseError(f"input file not found: {path}")
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return gbf_from_json(text, config)
    return gbf_from_text(text, config)


def save_gbf(f: GBF, path: Union[str, Path], fmt: str = "json") -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(gbf_to_json(f) if fmt == "json" else gbf_to_text(f))
    return path
