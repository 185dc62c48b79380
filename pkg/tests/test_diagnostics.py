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

"""Counterexample scan, intersection property, orbits, commutator scaling and the semi-conjugacy residual."""

import numpy as np
import pytest

from twistkam.diagnostics import (
    SemiConjugacy,
    circle_distance,
    commutator_residual,
    commutator_scaling,
    counterexample_2d,
    counterexample_functions,
    intersection_check,
    k2_average_probe,
    phase_portrait,
    seed_grid,
    semiconjugacy_residual,
)
from twistkam.diophantine import GOLDEN
from twistkam.errors import ContractError
from twistkam.funcspace import GridSpec, Interval, VectorFunction, constant
from twistkam.maps import CylinderMap, Twist, fixture_generator, rational_pair, standard_family


def test_counterexample_values():
    g, h = counterexample_functions(0.1)
    assert g(0.0) == pytest.approx(0.0, abs=1e-12)
    assert h(0.0) == pytest.approx(-2.0, abs=1e-12)
    assert h(0.5) == pytest.approx(2.0, abs=1e-12)


def test_counterexample_torus_is_disjoint():
    report = counterexample_2d(0.1, 1000)
    assert report["disjoint"]
    assert report["min_gap"] > 0
    assert report["h0"] == pytest.approx(-2.0, abs=1e-12)
    assert "perturbed" not in report


def test_counterexample_delta_range():
    with pytest.raises(ContractError):
        counterexample_2d(0.2, 100)
    with pytest.raises(ContractError):
        counterexample_2d(0.0, 100)


def test_counterexample_perturbed_scan():
    report = counterexample_2d(0.1, 1000, eta=0.01)
    perturbed = report["perturbed"]
    assert perturbed["eta"] == 0.01
    assert perturbed["min_gap"] >= 0
    assert len(perturbed["argmin"]) == 2


def test_intersection_of_standard_family(grid):
    report = intersection_check(standard_family(0.1, 3, 2, grid))
    assert report.passed
    assert report.margin > 0


def test_intersection_fails_for_constant_drift(grid):
    F = CylinderMap(Twist(), VectorFunction(constant(grid, 0.0), constant(grid, 1e-3)))
    report = intersection_check(F)
    assert not report
    assert report.margin == pytest.approx(-1e-3, abs=1e-15)
    assert report.to_json()["circles"] == 64


def test_intersection_of_zero_perturbation(grid):
    assert intersection_check(CylinderMap.twist(grid)).passed


def test_portrait_of_standard_family():
    grid = GridSpec(64, 8, Interval(0.0, 1.0))
    S = standard_family(0.1, 1, 1, grid)
    seeds = seed_grid(5, grid.interval)

    table = phase_portrait(S, seeds, 20, wrap_y=1.0)
    assert len(table) == 100
    assert table.escaped == {}
    assert np.all((table.rows[:, 2] >= 0) & (table.rows[:, 2] <= 1))
    assert np.all((table.rows[:, 3] >= 0) & (table.rows[:, 3] <= 1))

    again = phase_portrait(S, seeds, 20, wrap_y=1.0)
    np.testing.assert_array_equal(table.rows, again.rows)


def test_portrait_records_escaped_orbits(grid):
    F = CylinderMap(Twist(), VectorFunction(constant(grid, 0.0), constant(grid, 0.1)))
    table = phase_portrait(F, [[0.0, 0.25]], 10)
    assert table.escaped == {0: 3}
    assert len(table) == 2


def test_seed_grid():
    seeds = seed_grid(3, Interval(0.0, 1.0), x0=0.5)
    np.testing.assert_allclose(seeds, [[0.5, 0.25], [0.5, 0.5], [0.5, 0.75]])


def test_composition_view_tracks_operator(manufactured, kam_config):
    F, K, _, _ = manufactured
    report = commutator_residual(F, K, kam_config.grid)
    assert report.direct <= 1e-9
    assert 1.0 / 20 <= report.composition / report.operator <= 20


def test_commutator_scales_quadratically(kam_config):
    domain = kam_config.domain(kam_config.delta0)
    h_unit = fixture_generator(kam_config.grid.on(domain.widen(0.05)), 1.0)
    scaling = commutator_scaling(h_unit, GOLDEN, [1e-2, 3e-3, 1e-3], kam_config.grid, domain)
    assert scaling["operator_slope"] >= 1.8
    assert scaling["k2_slope"] >= 1.8
    assert len(scaling["operator"]) == 3


def test_k2_average_within_bound(manufactured, kam_config, grid):
    F, K, _, _ = manufactured
    report = k2_average_probe(F, K, kam_config.grid)
    assert report.bound > 0
    assert report.ratio <= 1.0

    F, K = rational_pair(1, 3, 0.1, 2, grid)
    assert k2_average_probe(F, K, grid).ratio == 0.0


def test_projection_semiconjugates_translation(grid):
    K = CylinderMap.translation(GOLDEN, grid)
    report = semiconjugacy_residual(SemiConjugacy.projection(grid), K, GOLDEN, grid)
    assert report.residual <= 1e-15
    assert report.slope == 0.0


def test_projection_misses_wrong_rotation(grid):
    K = CylinderMap.translation(0.3, grid)
    report = semiconjugacy_residual(SemiConjugacy.projection(grid), K, 0.25, grid)
    assert report.residual == pytest.approx(0.05, abs=1e-12)


def test_semiconjugacy_bound_validation(grid):
    with pytest.raises(ContractError):
        SemiConjugacy.projection(grid, lipschitz=1.0)


def test_circle_distance():
    np.testing.assert_allclose(circle_distance([0.9, 0.1, -0.2, 1.5]), [0.1, 0.1, 0.2, 0.5], atol=1e-15)
