"""End-to-end checks of the chromakit command line tool.

The binary's location comes from the CHROMAKIT_CLI environment variable,
set by ctest; without it these tests are skipped.
"""

import os
import subprocess

import pytest

CLI = os.environ.get("CHROMAKIT_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="CHROMAKIT_CLI not set")


def run(*args, env=None):
    merged = dict(os.environ)
    if env:
        merged.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=merged)


def test_closed_form_outputs():
    pretty = run("chromatic", "--cycle", "3", "--method", "closed-form", "--format", "pretty")
    assert pretty.returncode == 0
    assert pretty.stdout == "λ^3 - 3*λ^2 + 2*λ\n"

    machine = run("chromatic", "--cycle", "3", "--method", "closed-form")
    assert machine.returncode == 0
    assert machine.stdout == '{"coeffs":["0","2","-3","1"]}\n'


def test_count_methods():
    walk = run("chromatic", "--cycle", "5", "--method", "walk", "--lambda", "4")
    assert walk.returncode == 0
    assert walk.stdout == "240\n"

    oracle = run("chromatic", "--cycle", "5", "--method", "oracle", "--lambda", "4")
    assert oracle.stdout == "240\n"

    bijection = run("chromatic", "--cycle", "9", "--method", "bijection", "--lambda", "4")
    assert bijection.stdout == "19680\n"


def test_polynomial_method_with_lambda_evaluates():
    out = run("chromatic", "--cycle", "3", "--method", "dc", "--lambda", "3")
    assert out.returncode == 0
    assert out.stdout == "6\n"


def test_other_graph_sources():
    path = run("chromatic", "--path", "4", "--method", "dc", "--lambda", "3")
    assert path.stdout == "24\n"  # 3 * 2^3

    complete = run("chromatic", "--complete", "4", "--method", "oracle", "--lambda", "4")
    assert complete.stdout == "24\n"  # 4!


def test_file_input(tmp_path):
    # Triangle with a pendant vertex; the pendant edge listed first.
    path = tmp_path / "g.edges"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 1\n")
    out = run("chromatic", "--file", str(path), "--method", "dc", "--format", "pretty")
    assert out.returncode == 0
    assert out.stdout == "λ^4 - 4*λ^3 + 5*λ^2 - 2*λ\n"

    bad = tmp_path / "bad.edges"
    bad.write_text("2 1\nnot numbers\n")
    assert run("chromatic", "--file", str(bad), "--method", "dc").returncode == 2


def test_method_and_source_validation():
    assert run("chromatic", "--path", "4", "--method", "walk", "--lambda", "3").returncode == 2
    assert run("chromatic", "--cycle", "4", "--method", "walk").returncode == 2
    assert run("chromatic", "--cycle", "4", "--method", "nonsense").returncode == 2


def test_verify_agrees_and_is_deterministic():
    first = run("verify", "--n-max", "8", "--lambda-max", "5")
    second = run("verify", "--n-max", "8", "--lambda-max", "5")
    assert first.returncode == 0
    assert first.stdout == second.stdout
    assert "verdict: AGREE" in first.stdout
    assert "timing:" not in first.stdout

    timed = run("verify", "--n-max", "3", "--lambda-max", "3", "--timings")
    assert timed.returncode == 0
    assert "timing:" in timed.stdout


def test_encode_decode_round_trip():
    encoded = run("encode", "(1,2,1,3,2,3,1,4,2)", "--lambda", "4")
    assert encoded.returncode == 0
    assert encoded.stdout == "(1,1,1,2,2,2,1,3,1)\n"

    decoded = run("decode", "(1,1,1,2,2,2,1,3,1)", "--lambda", "4", "--debug")
    assert decoded.returncode == 0
    assert decoded.stdout == "sigma_bar (1,1,1,2,2,3,1,4,1)\n(1,2,1,3,2,3,1,4,2)\n"

    constant = run("decode", "(2,2,2)", "--lambda", "3")
    assert constant.returncode == 2
    assert "Z_3" in constant.stderr

    improper = run("encode", "(1,1,2)", "--lambda", "3")
    assert improper.returncode == 2


def test_budget_exit_codes():
    big = run("chromatic", "--complete", "12", "--method", "oracle", "--lambda", "10")
    assert big.returncode == 3

    # The environment variable tightens the oracle budget.
    squeezed = run("chromatic", "--cycle", "3", "--method", "oracle", "--lambda", "3",
                   env={"CHROMAKIT_BUDGET": "10"})
    assert squeezed.returncode == 3

    over = run("verify", "--n-max", "12", "--lambda-max", "8")
    assert over.returncode == 3
