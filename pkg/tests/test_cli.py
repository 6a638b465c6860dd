import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from umbral.cli import UsageError, main, report_from_dict, report_to_dict, run
from umbral.identities import SweepConfig, run_sweep


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("umbral").joinpath("output.schema.json").read_text())


def cli(*argv):
    return run(list(argv))


def test_poly_examples():
    assert cli("poly", "bernoulli", "--order", "2", "--n", "1") == ("[-1, 1]\n", 0)
    assert cli("poly", "euler", "--order", "0", "--n", "3") == ("[0, 0, 0, 1]\n", 0)
    assert cli("poly", "frobenius-euler", "--order", "1", "--n", "1", "--lambda", "-1") == ("[-1/2, 1]\n", 0)


def test_poly_pretty_and_scale():
    out, _ = cli("poly", "euler", "--n", "1", "--m-scale", "3", "--pretty")
    assert out == "[-3/2, 1]\nx - 3/2\n"
    out, _ = cli("poly", "bernoulli", "--order", "-2/3", "--n", "0")
    assert out == "[1]\n"


def test_poly_csv():
    out, _ = cli("poly", "bernoulli", "--order", "2", "--n", "1", "--format", "csv")
    assert out == "degree,coefficient\n0,-1\n1,1\n"


def test_sums_examples():
    out, _ = cli("sums", "plain", "--n", "2", "--m", "2", "--k", "0..2", "--format", "csv")
    assert out == "k,value\n0,4\n1,12\n2,38\n"
    out, _ = cli("sums", "alt", "--n", "1", "--m", "3", "--k", "1..1", "--format", "csv")
    assert out == "k,value\n1,-2\n"
    out, _ = cli("sums", "plain", "--n", "3", "--m", "1", "--k", "0..3", "--format", "json")
    assert [r["value"] for r in json.loads(out)["results"]] == ["1", "3", "9", "27"]


def test_sums_algorithms_agree():
    a, _ = cli("sums", "lambda", "--n", "3", "--m", "3", "--k", "0..6", "--lambda", "-2/3", "--algorithm", "enum")
    b, _ = cli("sums", "lambda", "--n", "3", "--m", "3", "--k", "0..6", "--lambda", "-2/3", "--algorithm", "series")
    assert a == b


def test_verify_examples():
    out, code = cli("verify", "thm3", "--n-max", "4", "--m-max", "3")
    assert code == 0 and out.splitlines()[-1] == "equal=12 mismatch=0 skipped=0"
    out, code = cli("verify", "thm4-printed", "--n-max", "2", "--m-max", "1")
    assert code == 0
    assert "Thm4.printed n=2 m=1 mismatch first_mismatch_degree=0 lhs=[-1, 1] rhs=[1, 1]" in out
    out, code = cli("verify", "all", "--n-max", "1", "--m-max", "1", "--lambda", "2")
    assert code == 0 and "mismatch=0" in out


def test_verify_expect_equal_fails_on_printed_theorem4():
    _, code = cli("verify", "thm4-printed", "--n-max", "2", "--m-max", "1", "--expect", "equal")
    assert code == 1
    assert main(["verify", "thm4-printed", "--n-max", "2", "--m-max", "1", "--expect", "equal"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "frobenius-euler", "--n", "2"],
        ["poly", "euler", "--n", "2", "--lambda", "3"],
        ["poly", "frobenius-euler", "--n", "2", "--lambda", "1"],
        ["poly", "bernoulli", "--n", "2", "--order", "1/2", "--m-scale", "2", "--hat"],
        ["poly", "bernoulli"],
        ["sums", "lambda", "--n", "2", "--m", "2", "--k", "0..2"],
        ["sums", "plain", "--n", "2", "--m", "2", "--k", "3..1"],
        ["sums", "plain", "--n", "0", "--m", "2", "--k", "0..1"],
        ["verify", "thm7"],
        ["verify", "thm3", "--jobs", "0"],
        ["verify", "lemma1", "--n-max", "4", "--trunc", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    err = capsys.readouterr().err
    assert err.startswith("umbral: error:") and err.count("\n") == 1


def test_jobs_env_var(monkeypatch):
    monkeypatch.setenv("UMBRAL_JOBS", "nope")
    with pytest.raises(UsageError):
        cli("verify", "thm3", "--n-max", "1", "--m-max", "1")
    monkeypatch.setenv("UMBRAL_JOBS", "2")
    assert cli("verify", "thm3", "--n-max", "3", "--m-max", "2")[1] == 0


JSON_COMMANDS = [
    ["poly", "bernoulli", "--order", "1/2", "--n", "4"],
    ["poly", "frobenius-euler", "--order", "2", "--n", "3", "--lambda", "-2/3", "--m-scale", "2"],
    ["sums", "alt", "--n", "3", "--m", "3", "--k", "0..5"],
    ["sums", "lambda", "--n", "2", "--m", "4", "--k", "2..4", "--lambda", "1/2"],
    ["verify", "all", "--n-max", "3", "--m-max", "2"],
    ["verify", "thm4-printed", "--n-max", "2", "--m-max", "1"],
    ["verify", "lemma1", "--n-max", "4", "--m-max", "2", "--alpha", "1,1/2"],
]


@pytest.mark.parametrize("argv", JSON_COMMANDS)
def test_json_output_validates(argv, schema):
    out, _ = cli(*argv, "--format", "json")
    record = json.loads(out)
    jsonschema.validate(record, schema)
    assert record["command"] == argv[0]


def test_report_json_round_trip():
    reports = run_sweep(SweepConfig(identities=("Lemma1.H", "Thm4.printed", "Thm6"), n_max=3, m_max=2))
    for r in reports:
        d = report_to_dict(r, "equal")
        assert report_from_dict(json.loads(json.dumps(d))) == r


def test_subprocess_output_is_byte_identical_across_jobs():
    base = [sys.executable, "-m", "umbral", "verify", "thm3,thm5,thm6", "--n-max", "4", "--m-max", "3", "--format", "json"]
    outputs = [subprocess.run(base + ["--jobs", j], capture_output=True, check=True).stdout for j in ("1", "1", "3")]
    assert outputs[0] == outputs[1] == outputs[2]
