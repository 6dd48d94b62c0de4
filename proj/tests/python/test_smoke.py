"""Smoke tests for the Python bindings and the CLI."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import latip


def test_solve_bkp_feasible():
    x = latip.solve_bkp([2, 3], 5, [2, 1])
    assert x == [1, 1]


def test_solve_bkp_infeasible():
    assert latip.solve_bkp([2, 4], 5, [3, 3]) is None


def test_both_norms_agree_with_oracle():
    for seed in range(12):
        a, b, u = latip.gen_bkp(seed, n=1 + seed % 4, umax=3, amax=9, feasible=seed % 2 == 0)
        expected = latip.oracle_solve([a], [b], u) is not None
        for norm in ("linf", "l1"):
            got = latip.solve_bkp(a, b, u, norm=norm)
            assert (got is not None) == expected
            if got is not None:
                assert sum(ai * xi for ai, xi in zip(a, got)) == b
                assert all(0 <= xi <= ui for xi, ui in zip(got, u))


def test_count_matches_oracle():
    assert latip.count_bkp([1, 1], 2, [2, 2]) == 3
    assert latip.count_bkp([1, 1], 2, [2, 2]) == latip.oracle_count([[1, 1]], [2], [2, 2])


def test_solve_and_count_bip():
    A = [[1, 1], [1, 2]]
    assert latip.solve_bip(A, [3, 5], [3, 3]) == [1, 2]
    assert latip.count_bip(A, [3, 5], [3, 3]) == 1


def test_optimize_bip():
    best = latip.optimize_bip([[1, 1]], [2], [2, 2], [1, -1])
    assert best is not None
    x, value = best
    assert value == -2


def test_big_integers_cross_the_boundary():
    big = 10**60 + 7
    x = latip.solve_bkp([big], big * 2, [3])
    assert x == [2]
    assert latip.count_bkp([big], big * 2, [3]) == 1


def test_shortest_length_profile_fractions():
    linf, l1 = latip.shortest_length_profile([2, 3], 5, [2, 1])
    assert linf == Fraction(1)
    assert l1 == Fraction(2)
    linf, l1 = latip.shortest_length_profile([2, 4], 5, [3, 3])
    assert linf is None and l1 is None


def test_dio_check_lemma():
    assert latip.dio_check_lemma(10, 2, 1, 20)


def test_validation_error_surfaces():
    with pytest.raises(ValueError):
        latip.solve_bkp([0, 3], 5, [2, 1])


# --- CLI ---------------------------------------------------------------------

CLI = os.environ.get("LATIP_CLI")
needs_cli = pytest.mark.skipif(CLI is None, reason="LATIP_CLI not set")


def run_cli(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


@needs_cli
def test_cli_solve_roundtrip(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"kind": "bkp", "a": ["2", "3"], "b": "5", "u": ["2", "1"]}))
    out = run_cli("solve", str(inst), "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["status"] == "feasible"
    assert doc["x"] == ["1", "1"]
    assert doc["verified"] is True


@needs_cli
def test_cli_infeasible_exit_code(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"kind": "bkp", "a": ["2", "4"], "b": "5", "u": ["3", "3"]}))
    assert run_cli("solve", str(inst)).returncode == 1


@needs_cli
def test_cli_count(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"kind": "bkp", "a": ["1", "1"], "b": "2", "u": ["2", "2"]}))
    out = run_cli("count", str(inst), "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["count"] == "3"


@needs_cli
def test_cli_optimize(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(
        json.dumps({"kind": "bip", "A": [["1", "1"], ["1", "2"]], "b": ["3", "5"],
                    "u": ["3", "3"]}))
    out = run_cli("optimize", str(inst), "--objective", "1,1", "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["value"] == "3"


@needs_cli
def test_cli_optimize_knapsack_file(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(
        json.dumps({"kind": "bkp", "a": ["1", "1"], "b": "2", "u": ["2", "2"],
                    "c": ["1", "-1"]}))
    out = run_cli("optimize", str(inst), "--json")
    assert out.returncode == 0
    assert json.loads(out.stdout)["value"] == "-2"


@needs_cli
def test_cli_input_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind":"bkp","a":["2"],"b":"5"}')
    assert run_cli("solve", str(bad)).returncode == 2
    assert run_cli("solve", str(tmp_path / "missing.json")).returncode == 2


@needs_cli
def test_cli_budget_exit_code(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"kind": "bkp", "a": ["1"], "b": "1", "u": ["99999999"]}))
    assert run_cli("oracle", str(inst)).returncode == 3


@needs_cli
def test_cli_gen_is_deterministic(tmp_path):
    a = run_cli("gen", "--kind", "bkp", "--n", "4", "--seed", "11", "--feasible")
    b = run_cli("gen", "--kind", "bkp", "--n", "4", "--seed", "11", "--feasible")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    doc = json.loads(a.stdout)
    assert doc["kind"] == "bkp" and len(doc["a"]) == 4


@needs_cli
def test_cli_gen_feasible_is_solvable(tmp_path):
    gen = run_cli("gen", "--kind", "bkp", "--n", "4", "--seed", "3", "--feasible")
    inst = tmp_path / "gen.json"
    inst.write_text(gen.stdout)
    assert run_cli("solve", str(inst)).returncode == 0


@needs_cli
def test_cli_reduce_emits_exact_rationals(tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"kind": "bkp", "a": ["2", "3"], "b": "5", "u": ["2", "1"]}))
    out = run_cli("reduce", str(inst), "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    branch = doc["branches"][0]
    assert branch["params"]["lambda"] == "33"
    assert branch["params"]["p"] == "33/8"
    assert branch["basis"][0][0] == "1/2"


@needs_cli
def test_cli_diophantine(tmp_path):
    out = run_cli("diophantine", "--lambda", "10", "--n", "2", "--t", "1", "--box", "11",
                  "--json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["lemma_holds"] is True
    assert ["1", "1", "1"] in doc["solutions"]
