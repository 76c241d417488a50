import io
import json

import pytest

from reciprocity.cli import main, parse_value


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_count_path():
    assert run("count", "--object", "path", "--n", "4", "--k", "3", "--r", "0", "--s", "0") == (0, "2\n")


def test_count_negative_length():
    assert run("count", "--object", "path", "--n", "-2", "--k", "3") == (0, "2\n")


def test_verify_certificate():
    code, text = run("verify", "--id", "eq12.1", "--n", "2", "--k", "2")
    d = json.loads(text)
    assert code == 0 and d["verdict"] is True and d["params"] == {"n": 2, "k": 2}


def test_verify_failure_exit_code():
    code, text = run("verify", "--id", "thm47", "--param", "lam=1,3", "--param", "mu=0,0",
                     "--k", "2", "--r", "2,1", "--s", "2,1")
    assert code == 1 and json.loads(text)["verdict"] is False


def test_gf_closed():
    assert run("gf", "--object", "altseq", "--k", "2", "--cumulative", "--closed") == (0, "1/(1 - x - x^2)\n")


def test_gf_series():
    assert run("gf", "--object", "path", "--k", "2", "--series", "6") == (0, "[1, 0, 1, 0, 2, 0, 4]\n")


def test_usage_errors():
    assert run("count", "--object", "nonsense")[0] == 2
    assert run("verify", "--id", "thm54", "--n", "1", "--k", "2")[0] == 2
    assert run("verify")[0] == 2
    assert run("count", "--object", "path", "--k", "2")[0] == 2


def test_scan_and_pretty():
    code, text = run("scan", "--conjecture", "53", "--n-max", "2", "--pretty")
    assert code == 0
    assert text.splitlines()[0].startswith("SKIP conj53")


def test_output_is_deterministic():
    a = run("gf", "--object", "path", "--k", "2", "--r", "1", "--s", "2", "--weighted", "--closed")
    b = run("gf", "--object", "path", "--k", "2", "--r", "1", "--s", "2", "--weighted", "--closed")
    assert a == b and a[0] == 0


def test_biject_inline_inputs():
    code, text = run("biject", "--which", "lemma2", "--input", "0:UUDUDD", "--k", "2")
    assert code == 0 and '"round_trip": true' in text
    code, text = run("biject", "--which", "lemma6", "--input", "1,3,2,2,1", "--k", "3")
    assert code == 0 and '"round_trip": true' in text
    code, text = run("biject", "--which", "prop16", "--input", "UUDD", "--n", "1", "--k", "1", "--m", "1")
    assert code == 0 and '"round_trip": true' in text


def test_biject_exhaustive():
    code, text = run("biject", "--which", "prop19", "--n", "1", "--k", "1", "--m", "1")
    assert code == 0 and json.loads(text)["verdict"] is True


@pytest.mark.parametrize("text,value", [("3", 3), ("1,2", (1, 2)), ("true", True), ("abc", "abc"),
                                        ("(2,)", (2,))])
def test_parse_value(text, value):
    assert parse_value(text) == value
