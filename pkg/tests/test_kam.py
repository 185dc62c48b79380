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

"""The conjugation step, the iteration driver and its pre-flight checks."""

import dataclasses

import numpy as np
import pytest

from twistkam.diagnostics import SemiConjugacy, semiconjugacy_residual
from twistkam.diophantine import GOLDEN
from twistkam.errors import ConfigError, ContractError
from twistkam.funcspace import Interval, VectorFunction, constant, evaluate, fit, lattice_sup
from twistkam.kam import (
    CONVERGED,
    HYPOTHESIS_VIOLATED,
    STEP_COLUMNS,
    KamConfig,
    KamState,
    build_h,
    compose_conjugacy,
    final_semiconjugacy,
    kam_step,
    preflight,
    run,
    schedule_N,
)
from twistkam.maps import Conjugacy, CylinderMap, Translation, Twist, rational_pair


def test_schedule():
    assert schedule_N(1e-8, 3) == pytest.approx(10 ** 0.5, abs=1e-4)
    assert schedule_N(1e-4, 3) == pytest.approx(1.7783, abs=1e-4)
    with pytest.raises(ContractError):
        schedule_N(1.0, 3)
    with pytest.raises(ContractError):
        schedule_N(0.0, 3)


def test_config_validation(golden, grid):
    with pytest.raises(ConfigError) as e:
        KamConfig(golden, Interval(-0.25, 0.25), 0.75, grid, tol_e0=-1.0)
    assert len(e.value.violations) == 2


def test_build_h_of_zero_pair(grid, golden):
    zero = VectorFunction.zeros(grid)
    assert build_h(zero, zero, golden, 2.0).is_zero()


def test_build_h_removes_f1_average(grid, golden):
    zero = VectorFunction.zeros(grid)
    f = VectorFunction(constant(grid, 1e-3), constant(grid, 0.0))
    h = build_h(f, zero, golden, 2.0)
    assert lattice_sup(h.c1) < 1e-15
    assert lattice_sup(h.c2 + 1e-3) < 1e-15


def test_build_h_solves_translation_equation(grid, golden):
    zero = VectorFunction.zeros(grid)
    k = VectorFunction(fit(lambda x, y: 1e-3 * np.cos(2 * np.pi * x), grid), constant(grid, 0.0))
    h = build_h(zero, k, golden, 2.0)

    rng = np.random.default_rng(4)
    x, y = rng.uniform(0, 1, 50), rng.uniform(-0.5, 0.5, 50)
    expected = 1e-3 * np.real(np.exp(2j * np.pi * x) / (np.exp(2j * np.pi * GOLDEN) - 1))
    np.testing.assert_allclose(evaluate(h.c1, x, y), expected, atol=1e-14)
    assert lattice_sup(h.c2) < 1e-15


def test_compose_empty_stack(grid):
    H = compose_conjugacy((), grid, grid.interval)
    assert H.gen.is_zero()


def test_compose_single_conjugacy(grid):
    gen = VectorFunction.fit(lambda x, y: 0.01 * np.sin(2 * np.pi * x), lambda x, y: 0.0 * x, grid)
    H = compose_conjugacy((Conjugacy(gen),), grid, grid.interval.shrink(0.1))
    x, y = np.linspace(0, 1, 20), np.linspace(-0.3, 0.3, 20)
    np.testing.assert_allclose(H.gen(x, y)[0], 0.01 * np.sin(2 * np.pi * x), atol=1e-14)


def test_compose_translations_add(grid):
    a = Conjugacy(VectorFunction(constant(grid, 0.01), constant(grid, 0.0)))
    b = Conjugacy(VectorFunction(constant(grid, 0.02), constant(grid, 0.0)))
    H = compose_conjugacy((a, b), grid, grid.interval.shrink(0.1))
    assert lattice_sup(H.gen.c1 - 0.03) < 1e-15
    assert lattice_sup(H.gen.c2) < 1e-15


def test_step_on_zero_perturbation(kam_config):
    grid = kam_config.grid.on(kam_config.domain(kam_config.delta0))
    zero = VectorFunction.zeros(grid)
    state = KamState(0, kam_config.delta0, zero, zero)
    after = kam_step(state, kam_config)
    assert after.i == 1
    assert after.delta == kam_config.delta0
    assert after.h_stack == ()


def test_step_reduces_manufactured_perturbation(manufactured, kam_config):
    F, K, _, _ = manufactured
    state = KamState(0, kam_config.delta0, F.pert, K.pert)
    before = max(lattice_sup(c) for c in (*F.pert, *K.pert))

    after = kam_step(state, kam_config)
    record = after.last
    assert after.i == 1 and len(after.h_stack) == 1
    assert 0 < after.delta < kam_config.delta0
    assert record.E0 <= 0.1 * before
    assert record.lipschitz > state.lipschitz
    assert len(record.row()) == len(STEP_COLUMNS)
    assert np.isfinite(record.generator_constant) and record.generator_constant > 0


def test_preflight_passes_for_manufactured_pair(manufactured, kam_config):
    F, K, _, W = manufactured
    checks, failed = preflight(F, K, W, kam_config)
    assert failed is None
    assert list(checks) == ["diophantine", "commutation", "intersection", "semiconjugacy"]


def test_preflight_names_first_failure(grid, golden):
    interval = Interval(-0.25, 0.25)
    config = KamConfig(golden, interval, 0.25, grid.on(interval))
    lattice = grid.on(config.domain(0.25))

    # f2 of constant sign, no circle meets its image
    F = CylinderMap(Twist(), VectorFunction(constant(lattice, 0.0), constant(lattice, 1e-3)))
    K = CylinderMap.translation(GOLDEN, lattice)
    checks, failed = preflight(F, K, SemiConjugacy.projection(lattice), config)
    assert checks["commutation"]["passed"]
    assert failed == "intersection"


def test_run_refuses_rational_rotation(grid):
    from twistkam.diophantine import DiophantineParams

    interval = Interval(-0.25, 0.25)
    config = KamConfig(DiophantineParams(1.0 / 3.0, 0.1, 1.5), interval, 0.25, grid.on(interval))
    lattice = grid.on(config.domain(0.25))
    F, K = rational_pair(1, 3, 0.1, 2, lattice)

    result = run(F, K, SemiConjugacy.projection(lattice), config)
    assert result.status == HYPOTHESIS_VIOLATED
    assert result.detail == "diophantine"
    assert result.final_state.i == 0
    assert result.H_total is None


def test_run_needs_translation_by_alpha(manufactured, kam_config):
    F, K, _, W = manufactured
    with pytest.raises(ContractError):
        run(F, CylinderMap(Translation(0.3), K.pert), W, kam_config)


def test_run_converges_on_manufactured_pair(manufactured, kam_config):
    F, K, _, W = manufactured
    result = run(F, K, W, kam_config)

    assert result.status == CONVERGED
    assert result.final_state.i <= 8
    assert result.residuals["F"] <= 1e-8
    assert result.residuals["K"] <= 1e-8
    assert result.final_state.delta >= kam_config.delta0 / 2

    # Super-linear decay while the perturbation is above the rounding floor
    steps = result.steps
    for previous, record in zip(steps[1:], steps[2:]):
        if previous.E0 > 1e-7:
            assert record.E0 <= previous.E0 ** 1.2

    blob = result.to_json()
    assert blob["status"] == CONVERGED
    assert blob["iterations"] == result.final_state.i

    W_final = final_semiconjugacy(result, W, kam_config.grid)
    K_lin = CylinderMap(Translation(GOLDEN), VectorFunction.zeros(result.H_total.grid))
    assert semiconjugacy_residual(W_final, K_lin, GOLDEN, kam_config.grid).residual <= 1e-6


def test_run_with_zero_iterations_reports_max_iterations(manufactured, kam_config):
    F, K, _, W = manufactured
    result = run(F, K, W, dataclasses.replace(kam_config, max_iter=0))
    assert result.status == "MaxIterations"
    assert len(result.steps) == 1
