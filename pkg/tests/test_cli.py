"""End-to-end runs of the command-line interface and its exit codes."""

import json

import pytest

from src.algebra.field import get_field
from src.cli.main import main
from src.config import THREADS_ENV
from src.functions.formats import gbf_from_dict, gbf_to_dict, save_gbf
from src.functions.gbf import GBF
from src.props.checkers import is_ghyperbent


@pytest.fixture
def gbent_n3k3_field(gbent_n3k3):
    return gbent_n3k3.to_field(get_field(3))


@pytest.fixture
def gbent_n3k4():
    return GBF.from_callable(3, 4, lambda b: 4 * b[0] + 8 * b[1] * b[2])


def _inline(f) -> str:
    return json.dumps(gbf_to_dict(f))


def _run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    return code, capsys.readouterr()


def test_construct_ps_ap_is_ghyperbent(capsys):
    code, out = _run(capsys, "construct", "--family", "ps-ap", "--m", "2", "--k", "3", "--seed", "7")
    assert code == 0
    f = gbf_from_dict(json.loads(out.out))
    assert f.n == 4 and f.k == 3 and f.is_field
    assert is_ghyperbent(f)


def test_construct_coset_u_text(capsys):
    code, out = _run(
        capsys, "construct", "--family", "coset-u", "--m", "2", "--k", "3",
        "--u-values", "0,4,2,6,0", "--f0", "0", "--format", "text",
    )
    assert code == 0
    assert out.out.startswith("gbf 4 3 field")


def test_check_inline(capsys, quaternary_bent):
    code, out = _run(capsys, "check", "--inline", _inline(quaternary_bent), "--property", "gbent")
    assert code == 0
    report = json.loads(out.out)
    assert report["verdict"] is True
    assert report["certificate"]["form"] == "regular"


def test_check_file(capsys, tmp_path, bent4):
    path = save_gbf(bent4, tmp_path / "bent.txt", fmt="text")
    code, out = _run(capsys, "check", "--input", str(path), "--property", "bent")
    assert code == 0
    assert json.loads(out.out)["verdict"] is True


def test_spectrum_json_and_text(capsys, quaternary_bent):
    code, out = _run(capsys, "spectrum", "--inline", _inline(quaternary_bent), "--check-paths")
    assert code == 0
    data = json.loads(out.out)
    assert data["spectrum"]["values"][3]["coords"] == [-2, 0]

    code, out = _run(capsys, "spectrum", "--inline", _inline(quaternary_bent), "--format", "text")
    assert code == 0
    assert "norm_sq" in out.out.splitlines()[0]


def test_spectrum_decimations(capsys, ps_ap_k3):
    code, out = _run(capsys, "spectrum", "--inline", _inline(ps_ap_k3), "--decimation", "1,7")
    assert code == 0
    assert [d["i"] for d in json.loads(out.out)["decimations"]] == [1, 7]


def test_missing_input_is_parse_error(capsys):
    code, out = _run(capsys, "spectrum")
    assert code == 2
    assert "ParseError" in out.err


def test_malformed_inline(capsys):
    code, _ = _run(capsys, "check", "--inline", "{not json")
    assert code == 2


def test_bent_on_level_two_is_invariant_violation(capsys, quaternary_bent):
    code, out = _run(capsys, "check", "--inline", _inline(quaternary_bent), "--property", "bent")
    assert code == 3
    assert "InvariantViolation" in out.err


def test_exhaustive_search_budget(capsys):
    code, out = _run(capsys, "search", "--property", "gbent", "--n", "4", "--k", "2")
    assert code == 4
    assert "BudgetExceeded" in out.err


@pytest.mark.parametrize("n, expected", [(2, 8), (4, 896)])
def test_bent_census(capsys, n, expected):
    code, out = _run(capsys, "search", "--property", "bent", "--n", str(n), "--k", "1", "--count-only")
    assert code == 0
    assert json.loads(out.out)["count"] == expected


def test_search_streams_matches(capsys):
    code, out = _run(capsys, "search", "--property", "bent", "--n", "2", "--k", "1")
    assert code == 0
    lines = [json.loads(line) for line in out.out.splitlines()]
    assert len(lines) == 9
    assert lines[-1]["count"] == 8
    assert all(sum(line["table"]) % 2 == 1 for line in lines[:-1])


def test_decompose_split(capsys, gbent_n3k3):
    code, out = _run(capsys, "decompose", "--inline", _inline(gbent_n3k3), "--theorem", "split")
    assert code == 0
    assert json.loads(out.out)[0]["holds"] is True


def test_decompose_hypothesis_error(capsys, gbent_n3k2):
    code, _ = _run(capsys, "decompose", "--inline", _inline(gbent_n3k2), "--theorem", "split-iff")
    assert code == 3


def test_bench(capsys):
    code, out = _run(capsys, "bench", "--n", "6", "--k", "2", "--seed", "1")
    assert code == 0
    rows = json.loads(out.out)
    assert {r["path"] for r in rows} == {"components", "direct"}
    assert all(r["agree"] for r in rows)


def test_invalid_thread_env(capsys, monkeypatch, quaternary_bent):
    monkeypatch.setenv(THREADS_ENV, "zero")
    code, out = _run(capsys, "check", "--inline", _inline(quaternary_bent))
    assert code == 2
    assert "ConfigError" in out.err


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["transmogrify"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "theorem, fixture, extra, expected",
    [
        ("prop2", "quaternary_bent", [], "prop2i"),
        ("thm4", "quaternary_bent", [], "thm4"),
        ("thm7", "ps_ap_k3", [], "thm7"),
        ("thm8", "gbent_n3k3_field", [], "thm8"),
        ("prop6", "gbent_n3k4", ["--t", "2"], "prop6"),
        ("cor1", "gbent_n3k3", [], "cor1"),
        ("recursive", "quaternary_bent", ["--s", "2"], "recursive"),
        ("base2t", "quaternary_bent", ["--t", "1"], "base2t"),
    ],
)
def test_decompose_theorem_ids(capsys, request, theorem, fixture, extra, expected):
    f = request.getfixturevalue(fixture)
    code, out = _run(capsys, "decompose", "--inline", _inline(f), "--theorem", theorem, *extra)
    assert code == 0
    reports = json.loads(out.out)
    assert {r["theorem"] for r in reports} == {expected}
    assert all(r["holds"] for r in reports)


def test_decompose_wrong_parity(capsys, gbent_n3k3):
    code, _ = _run(capsys, "decompose", "--inline", _inline(gbent_n3k3), "--theorem", "thm7")
    assert code == 3
