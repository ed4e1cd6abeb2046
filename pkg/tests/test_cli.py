import io
import json
import subprocess
import sys

import pytest

from semifactor.cli import run_command
from semifactor.invariants import factorization_report
from semifactor.poly import Polynomial as P
from semifactor.report import emit_report, to_jsonable
from semifactor.semidomain import Ring


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def test_factor_example():
    data = run_json("factor", "--ring", "nn-poly", "x^5+x^4+x^3+x^2+x+1")
    assert len(data["factorizations"]) == 2
    assert data["lengths"] == [2]
    assert data["elasticity"] == "1"
    assert data["divisor_count"] == 6
    assert [[a["display"] for a in z] for z in data["factorizations"]] == [
        ["x + 1", "x^4 + x^2 + 1"],
        ["x^2 + x + 1", "x^3 + 1"],
    ]


def test_family_example():
    data = run_json("family", "--n", "2", "--k", "1")
    assert data["lengths"] == [2, 3]
    assert data["elasticity"] == "3/2"


def test_chain_example():
    data = run_json("puiseux", "--r", "2/3", "chain", "--depth", "5")
    vals = [e["value"] for e in data["elements"]]
    assert vals == ["2", "4/3", "8/9", "16/27", "32/81", "64/243"]
    assert data["verified"] is True


def test_flag_position_is_free():
    a = run("--json", "puiseux", "--r", "2/3", "member", "4/9")
    b = run("puiseux", "--r", "2/3", "member", "4/9", "--json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["canonical"] == {"value": "4/9", "coeffs": [0, 0, 1]}


def test_json_formatting_conventions():
    assert to_jsonable(P((1, 1))) == {"coeffs": [1, 1], "display": "x + 1"}
    rep = factorization_report(Ring.NN_POLY, P((1,)))
    text = emit_report(rep, "json")
    assert '"factorizations":[[]]' in text
    from fractions import Fraction
    assert emit_report({"elasticity": Fraction(5, 3)}, "json") == '{"elasticity":"5/3"}\n'


def test_every_verb_runs():
    cmds = [
        ["divisors", "--ring", "qp-poly", "x^4+x^2+1"],
        ["atom", "--ring", "nn-laurent", "x^-1+1"],
        ["lengths", "6x+6"],
        ["elasticity", "x^7+4x^6+4x^5+x^4+4x^3+4x^2"],
        ["puiseux", "--r", "5/6", "divides", "5/6", "5"],
        ["puiseux", "--r", "2/3", "atom", "4/9"],
        ["puiseux", "--r", "2/3", "mcd", "4/3", "2", "26/9"],
        ["esemiring", "--r", "2/3", "mul", "1+e(2/3)", "1+e(4/9)"],
        ["esemiring", "--r", "2/3", "divides", "e(2/3)", "e(2/3)+e(4/3)"],
        ["esemiring", "--r", "2/3", "decompose", "2*e(2/3)+2*e(4/3)"],
        ["esemiring", "--r", "2/3", "factor", "1+e(2/3)+e(4/9)+e(10/9)"],
        ["nq", "--k", "2", "member", "3/2"],
        ["nq", "--k", "2", "atom", "9/4"],
        ["nq", "--k", "2", "sample", "9", "--count", "3"],
        ["nq", "--k", "2", "lengths", "9"],
    ]
    for cmd in cmds:
        for extra in ([], ["--json"]):
            code, out, err = run(*cmd, *extra)
            assert code == 0, (cmd, err)
            assert out.strip()
            if extra:
                json.loads(out)


def test_text_output():
    code, out, _ = run("factor", "x^5+x^4+x^3+x^2+x+1")
    assert code == 0
    assert "(x + 1) * (x^4 + x^2 + 1)" in out
    assert "elasticity     : 1" in out


@pytest.mark.parametrize(
    "argv,code",
    [
        (["factor", "x^2 +"], 2),
        (["frobnicate"], 2),
        (["factor", "--ring", "z-poly", "x"], 2),
        (["factor", "--bogus", "x"], 2),
        (["puiseux", "--r", "two-thirds", "member", "1"], 2),
        (["factor", "x - 1"], 3),
        (["factor", "0"], 3),
        (["puiseux", "--r", "1/2", "member", "1"], 3),
        (["puiseux", "--r", "2/3", "divides", "1/3", "1"], 3),
        (["nq", "--k", "2", "atom", "3/2"], 3),
        (["esemiring", "--r", "2/3", "factor", "1"], 3),
        (["factor", "x^100 + 1"], 4),
        (["factor", "--deg-cap", "4", "x^6 + 1"], 4),
        (["puiseux", "--r", "2/3", "member", "1/3", "--depth-cap", "0"], 4),
    ],
)
def test_exit_codes(argv, code):
    got, out, err = run(*argv)
    assert got == code, err
    assert out == ""
    assert err


def test_help_exits_cleanly(capsys):
    assert run_command(["--help"]) == 0


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "semifactor.cli", "family", "--n", "4", "--k", "1", "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["elasticity"] == "5/2"
