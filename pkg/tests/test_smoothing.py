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

"""Spectral smoothing, its remainder and the measured smoothing and interpolation inequalities."""

import numpy as np
import pytest

from twistkam.corpus import geometric_modes, mode_ladder
from twistkam.errors import ContractError
from twistkam.funcspace import average_over_x, constant, derivative, fit, lattice_sup
from twistkam.smoothing import (
    CutoffProfile,
    interpolation_check,
    remainder,
    remainder_decay_slope,
    smooth,
    verify_smoothing_bounds,
)


def mode(grid, m):
    return fit(lambda x, y: np.sin(2 * np.pi * m * x), grid)


@pytest.mark.parametrize("kind", ["bump", "quintic"])
def test_cutoff_profile(kind):
    profile = CutoffProfile(kind)
    t = np.linspace(0, 3, 301)
    chi = profile.chi(t)
    assert np.all(chi[t <= 1] == 1.0)
    assert np.all(chi[t >= 2] == 0.0)
    assert np.all((chi >= 0) & (chi <= 1))
    assert np.all(np.diff(chi) <= 0)


def test_cutoff_validation():
    with pytest.raises(ContractError):
        CutoffProfile("gaussian")
    with pytest.raises(ContractError):
        CutoffProfile(y_scale=0.0)


def test_plateau_keeps_mode(grid):
    f = mode(grid, 3)
    assert lattice_sup(smooth(f, 4.0) - f) < 1e-14


def test_support_removes_mode(grid):
    assert lattice_sup(smooth(mode(grid, 8), 4.0)) < 1e-14


def test_smoothing_commutes_with_average(corpus):
    _, f = corpus[0]
    np.testing.assert_array_equal(average_over_x(smooth(f, 2.5)).coeffs, smooth(average_over_x(f), 2.5).coeffs)


def test_smooth_plus_remainder(corpus):
    _, f = corpus[1]
    total = smooth(f, 1.5) + remainder(f, 1.5)
    np.testing.assert_allclose(total.coeffs, f.coeffs, atol=1e-15)


def test_band_limited_remainder_vanishes(corpus):
    for _, f in corpus:
        assert lattice_sup(remainder(f, 8.0)) < 1e-14


def test_smoothing_needs_N_above_one(grid):
    with pytest.raises(ContractError):
        smooth(mode(grid, 1), 1.0)


def test_smoothing_is_linear(corpus):
    (_, f), (_, g) = corpus[:2]
    combined = smooth(f * 2.0 + g * 3.0, 1.7)
    separate = smooth(f, 1.7) * 2.0 + smooth(g, 1.7) * 3.0
    assert lattice_sup(combined - separate) < 1e-13


def test_smoothing_is_idempotent_on_plateau(corpus):
    for _, f in corpus:
        once = smooth(f, 8.0)
        assert lattice_sup(smooth(once, 8.0) - once) < 1e-14


def test_smoothing_commutes_with_x_derivative(corpus):
    _, f = corpus[2]
    a = derivative(smooth(f, 2.5), 1, 0)
    b = smooth(derivative(f, 1, 0), 2.5)
    assert lattice_sup(a - b) < 1e-12


def test_constant_function_bounds(grid):
    table = verify_smoothing_bounds([("const", constant(grid, 2.0))], [4, 8], 0, 2)
    assert all(row["ratio"] <= 1.0 for row in table.rows)


def test_ladder_constants_are_stable(grid):
    table = verify_smoothing_bounds(mode_ladder(grid), [4, 8, 16], 0, 2, threads=2)
    for bound in ("smooth", "remainder"):
        assert 0 < table.stability(bound) <= 1.2


def test_corpus_constants_are_finite(corpus):
    table = verify_smoothing_bounds(corpus[:3], [2, 4], 0, 1)
    assert len(table.rows) == 3 * 2 * 2
    for bound in ("smooth", "remainder"):
        assert all(np.isfinite(v) for v in table.constants(bound).values())


def test_smoothing_bound_order_checked(corpus):
    with pytest.raises(ContractError):
        verify_smoothing_bounds(corpus, [4], 2, 1)


def test_remainder_decay(grid):
    assert remainder_decay_slope(geometric_modes(grid), [4, 8, 16]) >= 2.5


def test_interpolation_of_pure_mode(grid):
    assert interpolation_check(mode(grid, 1), 0, 1, 2) == pytest.approx(1.0, abs=5e-2)


def test_interpolation_of_zero(grid):
    assert interpolation_check(constant(grid, 0.0), 0, 1, 2) == 0.0


def test_interpolation_on_corpus(corpus):
    for _, f in corpus:
        assert interpolation_check(f, 0, 1, 2) <= 4.0
