import math

import pytest
from hypothesis import given, strategies as st

import reference_data as P
from ordseries import ParseError, cumulate, diff_by, lag_by, zip_op
from ordseries.calc import evaluate, parse


@pytest.mark.parametrize("text,value", [
    ("1 + 2 * 3", 7.0),
    ("(1 + 2) * 3", 9.0),
    ("2 ^ 3 ^ 2", 512.0),
    ("2 ** 3", 8.0),
    ("-2 ^ 2", -4.0),
    ("10 / 4 - 1", 1.5),
    ("1 < 2", 1.0),
    ("3 <= 2", 0.0),
    ("-(-3)", 3.0),
    ("1e3 / .5", 2000.0),
    ("sqrt(16) + abs(-1)", 5.0),
])
def test_scalar_expressions(text, value):
    assert evaluate(text, {}) == value


def test_scalar_domain_errors_give_nan():
    assert math.isnan(evaluate("log(-1)", {}))
    assert evaluate("1 / 0", {}) == math.inf


def test_parse_shape():
    assert parse("a + b * 2") == ("bin", "+", ("name", "a"), ("bin", "*", ("name", "b"),
                                                                 ("num", 2.0)))


@pytest.mark.parametrize("text", [
    "1 +", "(1", "1 < 2 < 3", "foo(1)", "x $ 2", "log()", "diff(x, 1, 2)", "lag(x, y)",
    "unknown + 1", "", "1 2",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        evaluate(text, {"x": P.z1(), "y": P.z2()})


def test_series_expressions_match_library():
    env = {"z1": P.z1(), "z2": P.z2()}
    assert evaluate("z1 + z2", env) == zip_op(P.z1(), P.z2(), "+")
    assert evaluate("z1 < z2", env) == zip_op(P.z1(), P.z2(), "<")
    assert evaluate("cumsum(z1)", env) == cumulate(P.z1())
    assert evaluate("diff(z1)", env) == diff_by(P.z1())
    assert evaluate("lag(z1, -1)", env) == lag_by(P.z1(), -1)
    assert evaluate("2 * z1", env) == zip_op(2, P.z1(), "*")


def test_series_functions_map_cells():
    out = evaluate("exp(log(z))", {"z": P.z1int()})
    assert out.cells == pytest.approx(P.Z1INT_VALUES)
    neg = evaluate("sqrt(z1)", {"z1": P.z1()})
    assert math.isnan(neg.cells[2])


def test_numbers_in_env():
    assert evaluate("k * 2", {"k": 3}) == 6.0


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 50))
def test_matches_python_arithmetic(a, b, c):
    text = f"{a} + {b} * {c} - ({a}) / {c}"
    assert evaluate(text, {}) == pytest.approx(a + b * c - a / c)
