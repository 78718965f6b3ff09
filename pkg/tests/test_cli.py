import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

import korbits.cli as cli
from korbits.catalog import ClaimResult


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(scope="module")
def schema():
    ref = resources.files("korbits") / "schemas" / "cli_output.schema.json"
    return json.loads(ref.read_text())


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "korbits.cli", "twisted", "--family", "GL", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "|I| = 2" in proc.stdout


def test_missing_subcommand_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "korbits.cli"], capture_output=True, text=True
    )
    assert proc.returncode == 2


def test_golden_twisted_table(capsys):
    code, out, err = run(["twisted", "--family", "GL", "--n", "3"], capsys)
    assert code == 0
    assert err == ""
    assert out == (
        "twisted GL(3)\n"
        "element  length  in-image\n"
        "-------  ------  --------\n"
        "e        0       yes\n"
        "(1 2 3)  2       yes\n"
        "(1 3 2)  2       yes\n"
        "(1 3)    3       yes\n"
        "|I| = 4, |I'| = 4, a_max = (1 3)\n"
    )


@pytest.mark.parametrize(
    "argv",
    [
        ["classify-tori", "--family", "Upq", "--p", "3", "--q", "2"],
        ["classify-tori", "--family", "SOodd1", "--n", "4"],
        ["orbits", "--family", "SL2n", "--n", "1"],
        ["orbits", "--family", "SOeven1", "--n", "2"],
        ["orbits", "--family", "Upq", "--p", "2", "--q", "1"],
        ["twisted", "--family", "Ustar", "--n", "2"],
        ["verify", "--family", "SL2n", "--n", "2"],
        ["verify", "--family", "Restriction", "--r", "2"],
    ],
)
def test_json_output_is_canonical_and_schema_valid(argv, capsys, schema):
    code, out, err = run(argv + ["--format", "json"], capsys)
    assert code == 0
    assert err == ""
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert json.dumps(payload, indent=2, sort_keys=True) + "\n" == out


def test_byte_identical_reruns(capsys):
    argv = ["orbits", "--family", "Upq", "--p", "2", "--q", "2", "--format", "json"]
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second


def test_table_and_json_agree_on_summary(capsys):
    base = ["orbits", "--family", "SL2n", "--n", "1"]
    _, table_out, _ = run(base, capsys)
    _, json_out, _ = run(base + ["--format", "json"], capsys)
    payload = json.loads(json_out)
    assert payload["summary"] == {"parameters": 3, "fixed": 1, "pairs": 1}
    assert "3 parameters: 1 over Z[1/2] + 2 in 1 Galois pair" in table_out
    assert len(payload["rows"]) == 3


def test_classify_tori_counts(capsys):
    code, out, _ = run(
        ["classify-tori", "--family", "Upq", "--p", "3", "--q", "2"], capsys
    )
    assert code == 0
    assert "3 torus classes" in out
    code, out, _ = run(["classify-tori", "--family", "SOodd1", "--n", "4"], capsys)
    assert code == 0
    assert "1 torus class\n" in out


def test_dot_output_only_for_twisted(capsys):
    code, out, _ = run(["twisted", "--family", "GL", "--n", "3", "--format", "dot"], capsys)
    assert code == 0
    assert out.startswith("digraph twisted {")
    assert out.rstrip().endswith("}")
    assert out.count("->") > 0
    with pytest.raises(SystemExit) as exc:
        run(["orbits", "--family", "GL", "--n", "3", "--format", "dot"], capsys)
    assert exc.value.code == 2


def test_invalid_params_exit_2(capsys):
    code, out, err = run(["classify-tori", "--family", "Upq", "--p", "1", "--q", "2"], capsys)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    code, _, err = run(["verify", "--family", "GL", "--n", "0"], capsys)
    assert code == 2
    code, _, err = run(["orbits", "--family", "GL", "--n", "3", "--p", "1"], capsys)
    assert code == 2
    assert "does not take" in err


def test_unknown_family_is_parser_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["orbits", "--family", "Sp2n", "--n", "2"], capsys)
    assert exc.value.code == 2


def test_unsupported_query_exit_3(capsys):
    code, out, err = run(["orbits", "--family", "GL", "--n", "3"], capsys)
    assert code == 3
    assert out == ""
    assert "little-Weyl-group" in err


def test_failed_claims_exit_1(capsys, monkeypatch):
    def fake(spec):
        return (
            ClaimResult(name="det(realizer) = 1", ok=True),
            ClaimResult(name="cocycle lands on (1 2)", ok=False, detail="off by i"),
        )

    monkeypatch.setattr(cli, "verify_matrix_claims", fake)
    code, out, _ = run(["verify", "--family", "GL", "--n", "2"], capsys)
    assert code == 1
    assert "2 claims: 1 passed, 1 failed" in out
    code, out, _ = run(["verify", "--family", "GL", "--n", "2", "--format", "json"], capsys)
    assert code == 1
    payload = json.loads(out)
    assert payload["summary"] == {"claims": 2, "failures": 1}
    assert payload["rows"][1]["detail"] == "off by i"


def test_verify_all_families_pass(capsys):
    cases = [
        ["--family", "GL", "--n", "3"],
        ["--family", "SL2n", "--n", "2"],
        ["--family", "Ustar", "--n", "2"],
        ["--family", "SOodd1", "--n", "2"],
        ["--family", "SOeven1", "--n", "2"],
        ["--family", "Upq", "--p", "2", "--q", "1"],
        ["--family", "Restriction", "--r", "2"],
    ]
    for tail in cases:
        code, out, err = run(["verify"] + tail, capsys)
        assert code == 0, (tail, err)
        assert ", 0 failed" in out
