import io
import json
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from muclass import QQ, Extension, Poly, PrimeField, RatFunc, parse_field, parse_poly
from muclass.cli import run
from muclass.errors import InvalidField, PolySyntaxError, WrongVariable

from conftest import QUINTIC_A, QUINTIC_B, QUINTIC_C, P

QUINTIC = [QUINTIC_A, QUINTIC_B, QUINTIC_C]


def cli(*argv):
    buf = io.StringIO()
    status = run(list(argv), out=buf)
    return status, buf.getvalue()


def cli_json(*argv):
    status, text = cli(*argv, "--json")
    return status, json.loads(text)


# parsing

def test_parse_examples():
    assert parse_poly("(t-1)^2").coeffs == (1, -2, 1)
    assert parse_poly("-t^5 + t^4 + t").coeffs == (0, 1, 0, 0, 1, -1)
    assert parse_poly("-1/12 t^5 + 1/12 t^4 + 13/12 t^2 - 2t + 1") == \
        P("t^5 - t^4 - t^2").scale(Fraction(-1, 12)) + P("(t-1)^2")
    assert parse_poly("2t^3") == parse_poly("2*t*t*t")
    assert parse_poly("-t^2") == -parse_poly("t^2")


def test_parse_in_other_fields():
    assert parse_poly("t^2 + 1", PrimeField(5)).coeffs == (1, 0, 1)
    assert parse_poly("1/2", PrimeField(5)).coeffs == (3,)
    E = Extension(QQ, [-2, 0, 1])
    assert parse_poly("t - x", E).coeffs == (E.neg(E.gen), E.one)
    R = RatFunc(QQ)
    assert parse_poly("t + eps", R) == parse_poly("t + ε", R)


@pytest.mark.parametrize("text,offset", [
    ("t^", 2), ("(t+1", 4), ("t + + ", 4), ("", 0), ("t^-1", 2), ("1/0", 2), ("2 $ t", 2),
])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text)
    assert info.value.offset == offset


def test_wrong_variable():
    with pytest.raises(WrongVariable) as info:
        parse_poly("t + s^2")
    assert info.value.offset == 4
    with pytest.raises(WrongVariable):
        parse_poly("t + eps")  # eps only exists over K(eps)


def test_offsets_are_bytes():
    with pytest.raises(WrongVariable) as info:
        parse_poly("ε + y", RatFunc(QQ))
    assert info.value.offset == len("ε + ".encode())


def test_parse_field_specs():
    assert parse_field("q") == QQ
    assert parse_field("fp:101") == PrimeField(101)
    assert parse_field("fp:3/x^2+1") == Extension(PrimeField(3), [1, 0, 1])
    assert parse_field("q/x^2-2") == Extension(QQ, [-2, 0, 1])
    for bad in ("fp:91", "r", "fp:x", "q/x^2+2x+1"):
        with pytest.raises(InvalidField):
            parse_field(bad)


CONTEXTS = [QQ, PrimeField(101), Extension(QQ, [-2, 0, 1]),
            Extension(PrimeField(3), [1, 0, 1]), RatFunc(QQ), RatFunc(PrimeField(7))]


@pytest.mark.parametrize("K", CONTEXTS, ids=repr)
def test_print_parse_round_trip(K):
    rng = random.Random(31)
    for _ in range(500):
        f = Poly.from_payloads(K, [K.random(rng) for _ in range(rng.randint(0, 6))])
        assert parse_poly(str(f), K) == f


# command line

def test_cli_mu():
    status, text = cli("mu", *QUINTIC)
    assert status == 0
    assert text.splitlines()[0] == "mu = 1"


def test_cli_mubasis_json():
    status, doc = cli_json("mubasis", *QUINTIC)
    assert status == 0
    out = doc["outputs"]
    assert out["mu"] == 1 and out["n"] == 5
    assert out["p"] == [["0", "1"], ["-1", "1"], ["-1", "1"]]
    assert all(out["checks"].values())


def test_cli_approx_reproduces_worked_example():
    status, doc = cli_json("approx", *QUINTIC, "--candidates", "2")
    assert status == 0
    out = doc["outputs"]
    assert out["lambda"] == "-1/12" and out["alpha"] == "2"
    assert out["family"]["a"] == [["1", "-2", "1"], ["-1/2", "3/4", "-1/6", "-1/12", "-1/12"]]
    assert doc["report"]["passed"] and doc["report"]["mu_eps"] == 2


def test_cli_json_is_byte_stable():
    first = cli("approx", *QUINTIC, "--json")
    second = cli("approx", *QUINTIC, "--json")
    assert first == second
    assert "timing" not in first[1]
    assert "timing" in cli("approx", *QUINTIC, "--json", "--timing")[1]


def test_cli_file_round_trip(tmp_path):
    status, doc = cli_json("approx", *QUINTIC, "--candidates", "2")
    path = tmp_path / "approx.json"
    path.write_text(json.dumps(doc))
    status, verified = cli_json("verify", "--file", str(path))
    assert status == 0 and verified["report"]["passed"]
    status, again = cli_json("mu", "--file", str(path))
    assert again["outputs"]["mu"] == 1


def test_cli_shear():
    status, doc = cli_json("shear", *QUINTIC, "--lam", "-1/12")
    assert status == 0
    assert doc["outputs"]["mu"] == 1
    assert doc["outputs"]["p"][1] == ["-1", "13/12"]


def test_cli_decompose():
    status, doc = cli_json("decompose", *QUINTIC, "t^2", "t^2 - t", "t^2 - t")
    assert status == 0
    assert doc["outputs"]["h1"] == ["0", "1"] and doc["outputs"]["h2"] == []


def test_cli_transport(tmp_path):
    # a family for the sheared triple (a - b/12, b, c), carried back by lambda = -1/12
    sheared = "-1/12*t^5 + 1/12*t^4 + 13/12*t^2 - 2*t + 1"
    status, doc = cli_json("approx", sheared, QUINTIC_B, QUINTIC_C, "--candidates", "2")
    assert status == 0 and doc["outputs"]["lambda"] == "0"
    path = tmp_path / "sheared.json"
    path.write_text(json.dumps(doc))
    status, moved = cli_json("transport", "--file", str(path), "--lam", "-1/12")
    assert status == 0 and moved["report"]["passed"]
    assert moved["outputs"]["family"]["a"] == [
        ["1", "-2", "1"], ["-1/2", "3/4", "-1/6", "-1/12", "-1/12"]]


def test_cli_sample_and_census():
    status, doc = cli_json("sample", "--field", "fp:101", "--n", "6", "--mu", "2", "--seed", "7")
    assert status == 0 and doc["outputs"]["mu"] == 2
    status, doc = cli_json("census", "--field", "fp:101", "--n", "6", "--count", "1000",
                           "--seed", "42")
    assert doc["outputs"]["histogram"] == {"2": 9, "3": 991}


def test_cli_probe():
    status, doc = cli_json("probe", *QUINTIC, "--candidates", "2", "--eps", "0,1")
    assert status == 0
    assert [row["mu"] for row in doc["outputs"]["probe"]] == [1, 2]


@pytest.mark.parametrize("argv,status,code", [
    (["mu", "t", "1"], 2, "UsageError"),
    (["mu", "t", "1", "s"], 2, "WrongVariable"),
    (["mu", "t^", "1", "1"], 2, "SyntaxError"),
    (["mu", "t", "1", "1", "--field", "fp:91"], 2, "InvalidField"),
    (["mu", "t", "t", "t^2"], 1, "InvalidTriple"),
    (["approx", "t", "1", "1"], 1, "MuMaximal"),
    (["approx", "t^5+t^3+t^2+t+1", "t^6+t^5+t^4+t^2", "t^5+t^3+t^2+t+1", "--field", "fp:2"],
     1, "NoAdmissiblePick"),
])
def test_cli_exit_codes(argv, status, code):
    got, text = cli(*argv, "--json")
    assert got == status
    assert json.loads(text)["error"]["code"] == code


def test_cli_usage_errors_from_argparse(capsys):
    assert run(["nosuchcommand"]) == 2
    assert run([]) == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "muclass", "mu", *QUINTIC],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("mu = 1")
