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

"""Small divisors, the diophantine scan, constant estimation and continued fractions."""

from fractions import Fraction

import numpy as np
import pytest

from twistkam.diophantine import (
    GOLDEN,
    DiophantineParams,
    check_diophantine,
    convergents,
    derived_params,
    estimate_constants,
    lemma_constant,
    nearest_rational,
    rational_approximant,
    record_minima,
    small_divisor,
)
from twistkam.errors import ContractError, DegenerateError


def test_small_divisor_examples():
    assert small_divisor(0.25, 2) == pytest.approx(2.0, abs=1e-15)
    assert small_divisor(0.5, 2) == pytest.approx(0.0, abs=1e-12)
    assert small_divisor(GOLDEN, 1) == pytest.approx(1.8641, abs=1e-4)


def test_small_divisor_is_even_in_m():
    m = np.arange(1, 50)
    np.testing.assert_allclose(small_divisor(GOLDEN, -m), small_divisor(GOLDEN, m), rtol=1e-12)


def test_small_divisor_rejects_zero_mode():
    with pytest.raises(ContractError):
        small_divisor(GOLDEN, 0)


def test_rational_fails_at_denominator():
    check = check_diophantine(1.0 / 3.0, 0.1, 1.0, 100)
    assert not check.passed
    assert check.first_violation == 3


def test_golden_passes_and_fails():
    assert check_diophantine(GOLDEN, 1.0, 1.0, 10000).passed

    # 2 sin(pi alpha) is below 3 already at m = 1
    check = check_diophantine(GOLDEN, 3.0, 1.0, 10000)
    assert not check.passed
    assert check.first_violation == 1


def test_estimated_tau_for_golden():
    sigma, tau = estimate_constants(GOLDEN, 10000)
    assert 0.99 <= tau <= 1.05
    assert check_diophantine(GOLDEN, sigma, tau, 10000).passed


def test_estimate_rejects_rationals():
    with pytest.raises(DegenerateError) as e:
        estimate_constants(0.5, 10000)
    assert (e.value.p, e.value.q) == (1, 2)


def test_nearest_rational():
    assert nearest_rational(2.0 / 7.0, 100) == (2, 7)
    assert nearest_rational(GOLDEN, 10000) is None


def test_record_minima_are_fibonacci():
    m, d = record_minima(GOLDEN, 1000)
    assert list(m) == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987]
    assert np.all(np.diff(d) < 0)


def test_derived_params():
    rho, mu, _ = derived_params(1.0, 1.2)
    assert (rho, mu) == (3, 60)
    rho, mu, _ = derived_params(1.0, 2.0)
    assert (rho, mu) == (4, 75)


def test_lemma_constant_is_zeta_two():
    assert lemma_constant(1.0, 1.0) == pytest.approx(np.pi ** 2 / 3, abs=1e-6)
    assert lemma_constant(2.0, 1.0) == pytest.approx(np.pi ** 2 / 6, abs=1e-6)


def test_params_validation():
    with pytest.raises(ContractError):
        DiophantineParams(1.5, 0.1, 1.0)
    with pytest.raises(ContractError):
        DiophantineParams(GOLDEN, 0.0, 1.0)


def test_params_report_derived_values(golden):
    blob = golden.to_json()
    assert blob["rho"] == golden.rho == int(np.floor(golden.tau)) + 2
    assert blob["mu"] == 15 * (golden.rho + 1)
    assert golden.check().passed


def test_golden_convergents():
    expected = [Fraction(0, 1), Fraction(1, 1), Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(5, 8)]
    assert convergents(GOLDEN, 6) == expected


def test_rational_approximant():
    assert rational_approximant(GOLDEN, 0.01) == Fraction(5, 8)
    with pytest.raises(ContractError):
        rational_approximant(GOLDEN, 0.0)
