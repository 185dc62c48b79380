# Copyright (C) 2024-2026 The twistkam authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software and associated
# documentation files (the "Software"), to deal in the Software without restriction, including without limitation the
# rights to use, copy, modify, merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
# permit persons to whom the Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all copies or substantial portions of the
# Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE
# WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR
# COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

"""The perturbation expression language: parsing, evaluation, printing and lowering."""

import math

import numpy as np
import pytest

from twistkam.dsl import (
    SAMPLE_EXPRESSIONS,
    Binary,
    Neg,
    Number,
    Power,
    Symbol,
    build_frequency_twist,
    evaluate,
    free_symbols,
    frequency_map,
    lower_to_function,
    parse,
    periodicity_mismatch,
    to_source,
    tokenize,
)
from twistkam.errors import ConfigError, ParseError, PeriodicityError
from twistkam.funcspace import Interval
from twistkam.funcspace import evaluate as evaluate_function


def reference(src, x, y):
    namespace = {"sin": math.sin, "cos": math.cos, "pi": math.pi, "x": x, "y": y}
    return eval(src.replace("^", "**"), {"__builtins__": {}}, namespace)


def test_standard_family_expression():
    value = evaluate(parse("0.1*sin(2*pi*3*x)/ (2*pi*3)^2"), 1.0 / 12.0, 0.0)
    assert value == pytest.approx(2.8145e-4, abs=1e-8)


def test_simple_sum():
    assert evaluate(parse("x + y"), 0.25, 0.5) == 0.75


def test_precedence():
    assert parse("-y^2") == Neg(Power(Symbol("y"), 2))
    assert parse("1 - 2 - 3") == Binary("-", Binary("-", Number(1.0), Number(2.0)), Number(3.0))
    assert parse("y^2^3") == Power(Power(Symbol("y"), 2), 3)


def test_unclosed_call():
    with pytest.raises(ParseError) as e:
        parse("sin(")
    assert e.value.offset == 4


def test_unknown_name():
    with pytest.raises(ParseError) as e:
        parse("2*tan(x)")
    assert e.value.offset == 2


def test_unexpected_character():
    with pytest.raises(ParseError) as e:
        tokenize("x $ y")
    assert e.value.offset == 2


def test_trailing_input():
    with pytest.raises(ParseError):
        parse("x y")


def test_division_by_variable():
    with pytest.raises(ParseError):
        parse("1/y")


def test_division_by_zero_constant():
    with pytest.raises(ParseError):
        parse("x/(pi - pi)")
    assert evaluate(parse("x/(2*pi)"), 1.0, 0.0) == pytest.approx(1 / (2 * np.pi))


def test_exponent_must_be_integer_literal():
    for src in ("y^2.5", "y^x", "y^-1"):
        with pytest.raises(ParseError):
            parse(src)


def test_parse_errors_are_config_errors():
    with pytest.raises(ConfigError) as e:
        parse(")")
    assert str(e.value).startswith("Could not parse expression: ")
    assert "Invalid configuration" not in str(e.value)


@pytest.mark.parametrize("src", SAMPLE_EXPRESSIONS)
def test_printed_tree_parses_back(src):
    tree = parse(src)
    assert parse(to_source(tree)) == tree


@pytest.mark.parametrize("src", SAMPLE_EXPRESSIONS)
def test_matches_python_arithmetic(src):
    tree = parse(src)
    for x, y in ((0.0, 0.0), (0.3, -0.2), (0.77, 0.45)):
        assert evaluate(tree, x, y) == pytest.approx(reference(src, x, y), rel=1e-12, abs=1e-15)


def test_vectorised_evaluation():
    x = np.linspace(0, 1, 7)
    values = evaluate(parse("sin(2*pi*x)*y"), x, 0.5)
    np.testing.assert_allclose(values, 0.5 * np.sin(2 * np.pi * x))
    assert evaluate(parse("3"), x, x).shape == (7,)


def test_free_symbols():
    assert free_symbols(parse("2*pi")) == set()
    assert free_symbols(parse("sin(x) + y^2")) == {"x", "y"}


def test_lower_periodic_expression(grid):
    f = lower_to_function("1e-3*(sin(2*pi*x) - cos(4*pi*x)*y)", grid)
    x, y = 0.3, -0.2
    expected = 1e-3 * (np.sin(2 * np.pi * x) - np.cos(4 * np.pi * x) * y)
    assert evaluate_function(f, x, y) == pytest.approx(expected, abs=1e-15)


def test_lower_rejects_non_periodic(grid):
    with pytest.raises(PeriodicityError) as e:
        lower_to_function("x", grid)
    assert e.value.mismatch == pytest.approx(1.0)


def test_lower_non_strict_warns(grid, caplog):
    f = lower_to_function("x", grid, strict=False)
    assert f.grid == grid
    assert "not 1-periodic" in caplog.text


def test_periodicity_mismatch():
    mismatch, y = periodicity_mismatch("x*y", Interval(-1.0, 2.0))
    assert mismatch == pytest.approx(2.0)
    assert y == pytest.approx(2.0)


def test_frequency_map():
    omega = frequency_map("y + y^3")
    np.testing.assert_allclose(omega(np.array([0.0, 1.0])), [0.0, 2.0])
    with pytest.raises(ConfigError):
        frequency_map("x + y")


def test_build_frequency_twist():
    twist = build_frequency_twist({"omega": "y + y^3"})
    assert twist.verify(Interval(-0.5, 0.5)) <= 1e-10
    assert twist.to_json()["omega"] == "y + y^3"

    explicit = build_frequency_twist({"omega": "2*y", "omega_inv": "y/2"})
    assert explicit.omega_inv(1.0) == 0.5
