import json

import pytest
from click.testing import CliRunner

from isocenter.cli import dumps_report, main


@pytest.fixture
def runner():
    return CliRunner()


def write_field(tmp_path, name, degree, coeffs, xi_sign="+"):
    obj = {
        "xi_sign": xi_sign,
        "degree": degree,
        "coefficients": [
            {"i": i, "j": j, "value": v} for (i, j), v in coeffs.items()
        ],
    }
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def uniform_field(tmp_path):
    return write_field(tmp_path, "uniform.json", 2, {(2, 0): "1/1+0/1i", (1, 1): "1/1+0/1i"})


@pytest.fixture
def witness_field(tmp_path):
    return write_field(tmp_path, "witness.json", 2, {(2, 0): "1/1+0/1i", (1, 1): "2/1+0/1i"})


@pytest.fixture
def linear_field(tmp_path):
    return write_field(tmp_path, "linear.json", 2, {})


def test_analyze_uniform_text(runner, uniform_field):
    result = runner.invoke(main, ["analyze", "--input", uniform_field])
    assert result.exit_code == 0
    assert "nilpotent_order1: True" in result.output
    assert "resonant letters: none" in result.output
    assert "verdict: LinearisableStructural" in result.output


def test_analyze_witness_printed(runner, witness_field):
    result = runner.invoke(main, ["analyze", "--input", witness_field])
    assert result.exit_code == 0
    assert "nonzero bracket" in result.output


def test_analyze_empty_alphabet(runner, linear_field):
    result = runner.invoke(main, ["analyze", "--input", linear_field, "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["alphabet"] == []
    assert report["nilpotent_order1"] is True


def test_json_roundtrip_byte_identical(runner, uniform_field):
    result = runner.invoke(main, ["analyze", "--input", uniform_field, "--format", "json"])
    assert result.exit_code == 0
    assert dumps_report(json.loads(result.output)) == result.output


def test_deterministic_output(runner, witness_field):
    args = ["analyze", "--input", witness_field, "--format", "json"]
    out1 = runner.invoke(main, args).output
    out2 = runner.invoke(main, args).output
    assert out1 == out2


def test_classify_command(runner, uniform_field):
    result = runner.invoke(main, ["classify", "--input", uniform_field, "--format", "json"])
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["quadratic_conditions"] == ["Q_ii"]
    assert report["uniform"]["holds"] is True
    assert report["cauchy_riemann"]["holds"] is False


def test_complexity_command(runner):
    result = runner.invoke(
        main, ["complexity", "--condition", "UI", "--degree", "5", "--format", "json"]
    )
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert (report["q"], report["m"]) == (7, 1)


def test_scan_periods_linear(runner, linear_field):
    result = runner.invoke(
        main,
        ["scan-periods", "--input", linear_field, "--radii", "0.05,0.1", "--format", "json"],
    )
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["max_rel_spread"] < 1e-10


def test_invalid_input_exit_code(runner, tmp_path):
    missing = str(tmp_path / "absent.json")
    assert runner.invoke(main, ["analyze", "--input", missing]).exit_code == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 2, "coefficients": [], "bogus": 1}')
    assert runner.invoke(main, ["analyze", "--input", str(bad)]).exit_code == 1
    assert runner.invoke(main, ["scan-periods", "--input", str(bad)]).exit_code == 1


def test_bad_radii_exit_code(runner, linear_field):
    result = runner.invoke(
        main, ["scan-periods", "--input", linear_field, "--radii", "abc"]
    )
    assert result.exit_code == 1


def test_verify_lemmas_seed_stability(runner):
    outs = []
    for seed in ("0", "1"):
        result = runner.invoke(
            main, ["verify-lemmas", "--seed", seed, "--format", "json"]
        )
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["all_passed"] is True
        outs.append([r["passed"] for r in report["lemmas"]])
    assert outs[0] == outs[1]


def test_verify_lemmas_mutation_fails(runner):
    result = runner.invoke(main, ["verify-lemmas", "--mutate-bracket-sign"])
    assert result.exit_code == 2
    assert "FAIL fond2" in result.output
