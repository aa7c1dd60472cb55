import pytest

import pygrd

WORKED = {
    "(z^2-2*z)/(-2*z+1)": ("-3", "3"),
    "(z^2+9*z)/(z+1)": ("-8", "2"),
    "(z^2-3*z)/(-z+1)": ("-2", "2"),
    "(z^2+13*z)/(z+1)": ("-12", "3"),
}


def test_parse_and_resultant():
    assert pygrd.parse_map("(z^2-2*z)/(-2*z+1)") == (["1", "-2", "0"], ["0", "-2", "1"])
    assert pygrd.resultant("(z^2-2*z)/(-2*z+1)") == "-3"
    assert pygrd.resultant("z^2+1/3") == "1"


def test_sigma():
    assert pygrd.sigma("z^2+1") == ("2", "4", "0")


@pytest.mark.parametrize("expr", sorted(WORKED))
def test_worked_examples_certify(expr):
    res, t = WORKED[expr]
    r = pygrd.analyze(expr)
    assert r["verdict"] == "PGR"
    assert r["resultant"] == res
    cert = r["certificate"]
    assert cert["extension_t"] == t
    assert cert["result_resultant"] == "-1"
    assert r["verified"] is True


def test_genuinely_bad_has_witness():
    r = pygrd.analyze("z^2+1/3")
    assert r["verdict"] == "GenuinelyBad"
    assert r["witness"]["p"] == "3"
    assert r["certificate"] is None
    assert r["normalized_resultant"] == "81"


def test_no_construct():
    r = pygrd.analyze("(z^2-2*z)/(-2*z+1)", construct=False)
    assert r["verdict"] == "PGRDecisionOnly"
    assert r["certificate"] is None


def test_roundtrip_is_lossless():
    for expr in list(WORKED) + ["z^2+1/3", "z^2", "2/z^2"]:
        r = pygrd.analyze(expr)
        assert pygrd.roundtrip(r) == r


@pytest.mark.parametrize("bad", ["", "z^2+", "z^3+1", "z", "(z^2-1)/(z-1)", "0", "z^2/0"])
def test_bad_input_raises_value_error(bad):
    with pytest.raises(ValueError):
        pygrd.parse_map(bad)


def test_parse_error_type():
    with pytest.raises(pygrd.ParseError):
        pygrd.parse_map("z^2+*1")


def test_quadpoly_and_k4():
    assert pygrd.k4_criterion(5) == (True, "1", "1")
    assert pygrd.k4_criterion(2)[0] is False
    q = pygrd.quadpoly(k=5)
    assert q["pgr"] and q["mod4"]["verdict"] == "GoodOverQ"
    q = pygrd.quadpoly(c="1/3")
    assert not q["pgr"] and q["failing_primes"] == ["3"]
    with pytest.raises(ValueError):
        pygrd.quadpoly(k=1, c="1/4")
