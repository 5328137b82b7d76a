"""JSON and text function files."""

import json

import pytest

from src.errors import InvariantViolation, ParseError
from src.functions.formats import (
    gbf_from_dict,
    gbf_from_json,
    gbf_from_text,
    gbf_to_dict,
    gbf_to_text,
    load_gbf,
    save_gbf,
)
from src.functions.gbf import GBF, DomainKind


def test_field_function_keeps_modulus(gf16):
    f = GBF(4, 3, list(range(8)) * 2, DomainKind.FIELD, gf16)
    data = gbf_to_dict(f)
    assert data["poly"] == "0x13"
    assert gbf_from_json(json.dumps(data)) == f


def test_text_format_with_comments():
    text = """# quaternary bent on V_2
gbf 2 2 vector
0 0   # x = 0, 1
0 2
"""
    f = gbf_from_text(text)
    assert f.table.tolist() == [0, 0, 0, 2]
    assert gbf_from_text(gbf_to_text(f)) == f


def test_text_header_with_poly():
    f = gbf_from_text("gbf 4 1 field 0x19\n" + " ".join(["0", "1"] * 8))
    assert f.field.modulus == 0x19


def test_domain_defaults_to_vector():
    f = gbf_from_dict({"n": 1, "k": 1, "table": [0, 1]})
    assert f.domain is DomainKind.VECTOR


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        '{"n": 2, "k": 1}',
        '{"n": "two", "k": 1, "table": [0, 0, 0, 0]}',
        '{"n": 2, "k": 1, "table": [0, "a", 0, 0]}',
        '{"n": 2, "k": 1, "domain": "torus", "table": [0, 0, 0, 0]}',
        '{"n": 2, "k": 1, "domain": "field", "poly": "zz", "table": [0, 0, 0, 0]}',
        "[1, 2, 3]",
    ],
)
def test_malformed_json(payload):
    with pytest.raises(ParseError):
        gbf_from_json(payload)


def test_malformed_text():
    with pytest.raises(ParseError):
        gbf_from_text("bgf 2 1 vector 0 0 0 0")
    with pytest.raises(ParseError):
        gbf_from_text("gbf 2")


def test_invariants_are_not_parse_errors():
    with pytest.raises(InvariantViolation):
        gbf_from_json('{"n": 2, "k": 1, "table": [0, 1, 2, 0]}')


def test_files(tmp_path, quaternary_bent):
    json_path = save_gbf(quaternary_bent, tmp_path / "f.json")
    text_path = save_gbf(quaternary_bent, tmp_path / "sub" / "f.txt", fmt="text")
    assert load_gbf(json_path) == quaternary_bent
    assert load_gbf(text_path) == quaternary_bent
    with pytest.raises(ParseError):
        load_gbf(tmp_path / "missing.json")
