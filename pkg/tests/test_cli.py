"""CLI contract: JSON in, canonical JSON out, stable exit codes."""

import io
import json

import pytest

from ringinv.cli import (EXIT_BUDGET, EXIT_COUNTEREXAMPLE, EXIT_INVOLUTION,
                         EXIT_NONE, EXIT_NOT_ENUMERABLE, EXIT_OK, EXIT_USAGE,
                         UsageError, main, parse_constraints, parse_element,
                         parse_ring)
from ringinv.rings import MatF, MatQ, Zn


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_job(capsys, monkeypatch, job):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(job)))
    return run_cli(capsys, "--job", "-")


def test_parse_ring_shorthands_and_json():
    assert parse_ring("zn:6") == Zn(6)
    assert parse_ring("m2f5") == MatF(2, 5)
    assert parse_ring('{"kind": "zn", "n": 8}') == Zn(8)
    assert parse_ring('{"kind": "matrix", "size": 2, '
                      '"scalars": {"kind": "q"}, '
                      '"involution": "transpose"}') == MatQ(2)
    assert parse_ring('{"kind": "matrix", "size": 2, '
                      '"scalars": {"kind": "fp", "p": 3}}') == MatF(2, 3)
    with pytest.raises(UsageError):
        parse_ring("m2c")
    with pytest.raises(UsageError):
        parse_ring('{"kind": "matrix", "size": 2, '
                   '"scalars": {"kind": "q"}, "involution": "conjugate"}')


def test_parse_element_and_constraints():
    ring = MatF(2, 2)
    a = parse_element(ring, '[["1","0"],["0","1"]]')
    assert a == ring.one
    with pytest.raises(UsageError):
        parse_element(ring, '[[1]]')
    cons = parse_constraints(ring, json.dumps(
        {"right_principal": {"principal": [["0", "0"], ["0", "1"]]},
         "right_annihilator": {"annihilator": [["0", "0"], ["0", "1"]]}}))
    assert cons.shape() == ("S", "T")
    cons = parse_constraints(ring, json.dumps(
        {"right_principal": {"colspace": [["0", "1"]]}}))
    assert cons.shape() == ("S",)
    with pytest.raises(UsageError):
        parse_constraints(ring, '{"bogus": {"principal": "0"}}')


def test_compute_moore_penrose_golden(capsys):
    code, out, _ = run_cli(capsys, "compute", "--ring", "m2q",
                           "--element", '[["2","-2"],["0","0"]]',
                           "--inverse", "moore-penrose")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["exists"] and doc["value"] == [["1/4", "0"], ["-1/4", "0"]]
    assert out.endswith("\n") and "\n" not in out[:-1]


def test_compute_nonexistent_returns_exit_one(capsys):
    code, out, _ = run_cli(capsys, "compute", "--ring", "m2q",
                           "--element", '[["0","1"],["0","0"]]',
                           "--inverse", "group")
    assert code == EXIT_NONE
    doc = json.loads(out)
    assert not doc["exists"] and "index" in doc["reason"]


def test_compute_weighted_and_pq(capsys):
    code, out, _ = run_cli(capsys, "compute", "--ring", "m2q",
                           "--element", '[["2","-2"],["0","0"]]',
                           "--inverse", "ef-mp")
    assert code == EXIT_OK
    assert json.loads(out)["value"] == [["1/4", "0"], ["-1/4", "0"]]
    code, out, _ = run_cli(capsys, "compute", "--ring", "m2q",
                           "--element", '[["2","-2"],["0","0"]]',
                           "--inverse", "bott-duffin",
                           "--p", '[["1","-1"],["0","0"]]')
    assert code == EXIT_OK
    assert json.loads(out)["value"] == [["1/2", "-1/2"], ["0", "0"]]


def test_enumerate_inner_inverses(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--ring", "zn:6",
                           "--element", "2", "--equations", "1")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 2 and doc["members"] == ["2", "5"]
    code, out, _ = run_cli(capsys, "enumerate", "--ring", "zn:6",
                           "--element", "2", "--equations", "1",
                           "--count-only")
    assert "members" not in json.loads(out)


def test_enumerate_named_system(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--ring", "m2f2",
                           "--element", '[["1","1"],["0","0"]]',
                           "--equations", "moore-penrose")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 0


def test_involution_exit_code(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--ring", "zn:6",
                           "--element", "2", "--equations", "1,2,3,4")
    assert code == EXIT_INVOLUTION and "involution" in err


def test_not_enumerable_exit_code(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--ring", "m2q",
                           "--element", '[["1","0"],["0","0"]]',
                           "--equations", "1")
    assert code == EXIT_NOT_ENUMERABLE


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "compute", "--ring", "zn:6",
                           "--element", "2", "--inverse", "nope")
    assert code == EXIT_USAGE and "unknown inverse" in err
    code, _, _ = run_cli(capsys, "compute", "--ring", "nosuch",
                         "--element", "2", "--inverse", "group")
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys)
    assert code == EXIT_USAGE


def test_prescribe_modes(capsys):
    cons = json.dumps(
        {"right_principal": {"colspace": [["0", "1"]]},
         "right_annihilator": {"colspace": [["0", "1"]]}})
    code, out, _ = run_cli(capsys, "prescribe", "--ring", "m2f5",
                           "--element", '[["0","1"],["0","0"]]',
                           "--constraints", cons, "--mode", "outer")
    assert code == EXIT_OK
    assert json.loads(out)["value"] == [["0", "0"], ["1", "0"]]
    code, out, _ = run_cli(capsys, "prescribe", "--ring", "m2f5",
                           "--element", '[["0","1"],["0","0"]]',
                           "--constraints", cons, "--mode", "reflexive")
    assert json.loads(out)["value"] == [["0", "0"], ["1", "0"]]
    code, out, _ = run_cli(capsys, "prescribe", "--ring", "m2f5",
                           "--element", '[["0","1"],["0","0"]]',
                           "--constraints",
                           '{"right_principal": {"colspace": [["0","1"]]}}',
                           "--mode", "one")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["count"] == 25 and "base" in doc


def test_prescribe_none(capsys):
    # rann(a) cannot be xaR for a {1}-inverse of a nonzero nilpotent
    cons = json.dumps({"right_principal": {"colspace": [["1", "0"]]},
                       "right_annihilator": {"colspace": [["1", "0"]]}})
    code, out, _ = run_cli(capsys, "prescribe", "--ring", "m2f5",
                           "--element", '[["0","1"],["0","0"]]',
                           "--constraints", cons, "--mode", "outer")
    assert code == EXIT_NONE
    assert not json.loads(out)["exists"]


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--ring", "zn:6",
                           "--theorems", "T-invertible-lemma")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc[0]["passed"] and doc[0]["cases_checked"] == 6
    code, out, _ = run_cli(capsys, "verify", "--ring", "zn:6",
                           "--theorems", "T-1I-projectors",
                           "--max-cases", "5")
    assert code == EXIT_BUDGET
    assert not json.loads(out)[0]["complete"]
    code, _, _ = run_cli(capsys, "verify", "--ring", "zn:6",
                         "--theorems", "T-no-such")
    assert code == EXIT_USAGE
    code, _, _ = run_cli(capsys, "verify", "--ring", "m2q")
    assert code == EXIT_NOT_ENUMERABLE


def test_job_spec_stdin(capsys, monkeypatch):
    code, out, _ = run_job(capsys, monkeypatch, {
        "command": "compute",
        "ring": "m2q",
        "element": [["2", "-2"], ["0", "0"]],
        "options": {"inverse": "core"},
    })
    assert code == EXIT_OK
    assert json.loads(out)["value"] == [["1/2", "0"], ["0", "0"]]
    code, _, err = run_job(capsys, monkeypatch, {"command": "nope"})
    assert code == EXIT_USAGE
    code, _, err = run_job(capsys, monkeypatch, {
        "command": "compute", "ring": "m2q",
        "element": [["1", "0"], ["0", "0"]],
        "options": {"inverse": "group", "bogus": 1}})
    assert code == EXIT_USAGE and "bogus" in err


def test_byte_identical_output(capsys):
    argv = ("enumerate", "--ring", "m2f2",
            "--element", '[["1","1"],["0","0"]]', "--equations", "1,2")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
    argv = ("verify", "--ring", "zn:6", "--theorems",
            "T-1I-projectors,T-mitsch-extremes")
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second
