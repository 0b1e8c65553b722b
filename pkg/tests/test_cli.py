import json
import subprocess
import sys
from pathlib import Path

import pytest

from schubpres.cli import EXIT_FAIL, RunReport, emit, main

DATA = Path(__file__).parent / "data"

GOLDEN = [
    (["essential-set", "425163"], "essential_set_425163.txt"),
    (["essential-set", "425163", "--format", "json"], "essential_set_425163.json"),
    (["fulton-table", "425163"], "fulton_table_425163.txt"),
    (["minimal-generators", "--w", "1243"], "minimal_generators_1243.txt"),
    (["minimal-generators", "--w", "1243", "--format", "json"], "minimal_generators_1243.json"),
    (["minimal-generators", "--w", "23541"], "minimal_generators_23541.txt"),
    (["minimal-generators", "1324"], "minimal_generators_1324.txt"),
    (["minimal-generators", "1324", "--variant", "two"], "minimal_generators_1324_two.txt"),
    (["generators", "1324", "--variant", "one"], "generators_1324_one.txt"),
    (["generators", "1324", "--variant", "two", "--format", "json"], "generators_1324_two.json"),
]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,golden", GOLDEN)
def test_golden_outputs(argv, golden, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    assert out == (DATA / golden).read_text()


def test_json_round_trip(capsys):
    code, out, _ = run(["generators", "1324", "--variant", "two", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["payload"] == {"shapes": [[1], [1, 1]]}
    assert json.dumps(doc, sort_keys=True) + "\n" == out


def test_empty_essential_set(capsys):
    code, out, _ = run(["essential-set", "4321"], capsys)
    assert code == 0
    assert "E(w) = {}" in out.splitlines()


@pytest.mark.parametrize("argv", [
    ["essential-set", "1224"],
    ["essential-set"],
    ["make-bigrassmannian", "2", "2", "3", "6"],
    ["generators", "321", "--variant", "one"],
    ["verify-conjecture", "--r-max", "0", "--k-max", "2"],
    ["verify-ideal"],
    ["minimal-generators"],
    ["coxeter-scan", "--group", "E8"],
    ["identity-check", "nope"],
    ["verify-parabolic", "1234", "--J", "4"],
    ["no-such-command"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2
    assert out == ""
    assert err


def test_failing_status_maps_to_exit_1():
    rep = RunReport("x", "fail", {}, ["line"])
    assert rep.exit_code == EXIT_FAIL
    assert emit(rep) == "line\nstatus: fail\n"


def test_subcommands_pass(capsys):
    cases = [
        ["make-bigrassmannian", "2", "4", "2", "6"],
        ["generators", "1243", "--variant", "grassmannian"],
        ["generators", "1243", "--variant", "schur"],
        ["verify-ideal", "--n", "5"],
        ["verify-ideal", "1324", "--budget-degree", "2"],
        ["verify-conjecture", "--r-max", "2", "--k-max", "2"],
        ["verify-parabolic", "213", "--J", "2"],
        ["verify-parabolic", "--n", "3"],
        ["structure-constant", "213", "213", "312"],
        ["structure-constant", "--group", "B2", "--", "2,1", "1,-2", "2,-1"],
        ["identity-check", "column", "--size", "6"],
        ["coxeter-scan", "--group", "B2", "--group", "B3"],
    ]
    for argv in cases:
        code, out, _ = run(argv, capsys)
        assert code == 0, argv
        assert out.endswith("status: pass\n")


def test_make_bigrassmannian_output(capsys):
    _, out, _ = run(["make-bigrassmannian", "2", "2", "1", "6"], capsys)
    assert out.splitlines()[0] == "v = 341256"


def test_structure_constant_output(capsys):
    _, out, _ = run(["structure-constant", "213", "213", "231", "--format", "json"], capsys)
    assert json.loads(out)["payload"]["coefficient"] == 0


def test_deterministic_bytes(capsys):
    argv = ["verify-conjecture", "--r-max", "2", "--k-max", "3", "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubpres", "essential-set", "1243"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "E(w) = {1324, 2134}"
