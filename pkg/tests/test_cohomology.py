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

"""The translation and twist difference operators and the cohomological solver."""

import numpy as np
import pytest

from twistkam.cohomology import apply_delta_alpha, apply_delta_U0, defect_N, solve_delta_alpha, solve_vector
from twistkam.diophantine import GOLDEN, DiophantineParams
from twistkam.errors import DiophantineError, ResonanceError
from twistkam.funcspace import VectorFunction, average_over_x, constant, evaluate, fit, lattice_sup
from twistkam.maps import fixture_generator, manufacture_commuting_pair
from twistkam.smoothing import smooth


def sup_difference(f, g):
    return lattice_sup(f - g)


def random_points(interval, n=100, seed=2):
    rng = np.random.default_rng(seed)
    return rng.uniform(0, 1, n), rng.uniform(interval.lo, interval.hi, n)


def test_delta_alpha_of_x_independent_function(grid):
    assert lattice_sup(apply_delta_alpha(fit(lambda x, y: y ** 2, grid), GOLDEN)) < 1e-14


def test_delta_alpha_half_turn(grid):
    u = fit(lambda x, y: np.sin(2 * np.pi * x), grid)
    d = apply_delta_alpha(u, 0.5)
    x, y = random_points(grid.interval)
    np.testing.assert_allclose(evaluate(d, x, y), -2 * np.sin(2 * np.pi * x), atol=1e-12)


def test_delta_U0_of_constant_second_component(grid):
    u = VectorFunction(constant(grid, 0.0), constant(grid, 0.7))
    d = apply_delta_U0(u)
    assert sup_difference(d.c1, constant(grid, -0.7)) < 1e-14
    assert lattice_sup(d.c2) < 1e-14


def test_delta_U0_of_action(grid):
    u = VectorFunction(fit(lambda x, y: y, grid), constant(grid, 0.0))
    d = apply_delta_U0(u)
    assert lattice_sup(d.c1) < 1e-14
    assert lattice_sup(d.c2) < 1e-14


def test_delta_U0_of_sine(grid):
    u = VectorFunction(fit(lambda x, y: np.sin(2 * np.pi * x), grid), constant(grid, 0.0))
    d = apply_delta_U0(u)
    x, y = random_points(grid.interval)
    expected = np.sin(2 * np.pi * (x + y)) - np.sin(2 * np.pi * x)
    np.testing.assert_allclose(evaluate(d.c1, x, y), expected, atol=1e-10)


def test_operators_commute(grid, corpus):
    for _, f in corpus[:4]:
        u = VectorFunction(f, f * 0.5)
        a = apply_delta_alpha(apply_delta_U0(u), GOLDEN)
        b = apply_delta_U0(apply_delta_alpha(u, GOLDEN))
        assert max(sup_difference(a.c1, b.c1), sup_difference(a.c2, b.c2)) <= 1e-9


def test_solve_x_independent(grid, golden):
    solution = solve_delta_alpha(fit(lambda x, y: 1 + y ** 3, grid), golden)
    assert lattice_sup(solution.u) < 1e-14
    assert solution.residual_c0 < 1e-14


def test_solve_single_mode(grid, golden):
    solution = solve_delta_alpha(fit(lambda x, y: np.cos(2 * np.pi * x), grid), golden)
    assert solution.residual_c0 <= 1e-10

    x, y = random_points(grid.interval)
    expected = np.real(np.exp(2j * np.pi * x) / (np.exp(2j * np.pi * GOLDEN) - 1))
    np.testing.assert_allclose(evaluate(solution.u, x, y), expected, atol=1e-12)


def test_solver_exact_on_corpus(corpus, golden):
    for _, phi in corpus:
        solution = solve_delta_alpha(phi, golden)
        assert solution.residual_c0 <= 1e-10
        assert not np.any(solution.u.coeffs[0])

        rhs = phi - average_over_x(phi)
        assert sup_difference(apply_delta_alpha(solution.u, golden.alpha), rhs) <= 1e-10


def test_solution_bound(corpus, golden):
    for _, phi in corpus:
        solution = solve_delta_alpha(phi, golden)
        assert solution.bound_ratio <= golden.lemma_constant


def test_solver_is_linear(corpus, golden):
    (_, a), (_, b) = corpus[:2]
    combined = solve_delta_alpha(a * 2.0 - b * 0.5, golden, bound=False).u
    separate = solve_delta_alpha(a, golden, bound=False).u * 2.0 - solve_delta_alpha(b, golden, bound=False).u * 0.5
    assert sup_difference(combined, separate) <= 1e-12


def test_rational_rotation_is_resonant(grid):
    with pytest.raises(ResonanceError) as e:
        solve_delta_alpha(fit(lambda x, y: np.cos(2 * np.pi * x), grid), DiophantineParams(1.0 / 3.0, 0.1, 1.5))
    assert e.value.m == 3


def test_near_rational_fails_diophantine_scan(grid):
    dio = DiophantineParams(0.5 + 1e-6, 0.1, 1.5)
    with pytest.raises(DiophantineError):
        solve_delta_alpha(fit(lambda x, y: np.cos(2 * np.pi * x), grid), dio)


def test_defect_of_zero_pair(grid):
    zero = VectorFunction.zeros(grid)
    assert defect_N(zero, zero, 4.0).is_zero()


def _defect(golden, grid, eps):
    domain = grid.interval
    h_gen = fixture_generator(grid.on(domain.widen(0.05)), eps)
    F, K, _, _ = manufacture_commuting_pair(h_gen, golden.alpha, grid, domain)
    N = 4.0
    sk = K.pert.map(lambda c: smooth(c, N))
    xi, _ = solve_vector(sk - sk.average_over_x(), golden)
    return defect_N(xi, F.pert, N), xi


def test_defect_scales_quadratically(grid, golden):
    large, _ = _defect(golden, grid, 1e-3)
    small, _ = _defect(golden, grid, 1e-4)
    size = [max(lattice_sup(d.c1), lattice_sup(d.c2)) for d in (large, small)]
    assert size[0] / size[1] >= 50


def test_defect_average_is_minus_xi2_average(grid, golden):
    defect, xi = _defect(golden, grid, 1e-3)
    avg = defect.average_over_x()
    assert lattice_sup(avg.c2) < 1e-14
    assert lattice_sup(avg.c1 + average_over_x(xi.c2)) < 1e-14
