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

import logging
from dataclasses import dataclass

import numpy as np

from ..cohomology import apply_delta_alpha, apply_delta_U0
from ..errors import DomainError, GridMismatchError
from ..funcspace import average_over_x, lattice_sup
from ..maps import manufacture_commuting_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommutatorReport:
    direct: float
    operator: float
    composition: float


def _common_grid(F, K, grid):
    common = F.domain.intersect(K.domain)
    for g in (F.grid, K.grid):
        if (g.nx, g.ny) != (grid.nx, grid.ny):
            raise GridMismatchError(g, grid)
    return common


def _reach(F, K):
    # How far either map moves the action variable
    return max(lattice_sup(F.pert.c2), lattice_sup(K.pert.c2))


def commutator_residual(F, K, grid):
    """The commutator of F and K seen three ways.

    direct is |F o K - K o F|_0 by sampling, operator is |L(f, k)|_0 for L(f, k) = Delta_U0 k - Delta_alpha f, and
    composition is |f o K - f o T_alpha - k o F + k o U0|_0, which equals the operator view when F and K commute.
    """
    common = _common_grid(F, K, grid)
    reach = _reach(F, K)
    if 2 * (reach + 1e-9) >= common.length:
        raise DomainError(reach, common, "maps move the action by {:.3g}, no margin left in {}".format(reach, common))
    target = common.shrink(reach + 1e-9)

    x, y = grid.on(target).dense_axes(2)
    X, Y = np.meshgrid(x, y, indexing="ij")

    kx, ky = K(X, Y)
    fx, fy = F(X, Y)
    fkx, fky = F(kx, ky)
    kfx, kfy = K(fx, fy)
    direct = float(max(np.max(np.abs(fkx - kfx)), np.max(np.abs(fky - kfy))))

    f = F.pert.refit_on_interval(common)
    k = K.pert.refit_on_interval(common)
    alpha = K.base.alpha
    L = apply_delta_U0(k) - apply_delta_alpha(f, alpha)
    operator = max(lattice_sup(L.c1), lattice_sup(L.c2))

    terms = []
    for fc, kc in zip(f, k):
        terms.append(fc(kx, ky) - fc(X + alpha, Y) - kc(fx, fy) + kc(X + Y, Y))
    composition = float(max(np.max(np.abs(t)) for t in terms))

    return CommutatorReport(direct, operator, composition)


@dataclass(frozen=True)
class K2Report:
    average: float
    bound: float
    ratio: float


def k2_average_probe(F, K, grid):
    """|[k2]|_0 against |f|_1 |k|_0 + |k|_1 |f|_0, reported without assertion."""
    common = _common_grid(F, K, grid)
    f = F.pert.refit_on_interval(common)
    k = K.pert.refit_on_interval(common)

    average = lattice_sup(average_over_x(k.c2))
    bound = f.norm(1) * k.norm(0) + k.norm(1) * f.norm(0)
    if bound > 0:
        ratio = average / bound
    else:
        ratio = 0.0 if average == 0 else float("inf")
    return K2Report(average, bound, ratio)


def commutator_scaling(h_unit, alpha, eps_list, grid, interval):
    """Log-log slopes of |L(f, k)|_0 and |[k2]|_0 against eps over manufactured pairs with generator eps h_unit."""
    operators = []
    averages = []
    for eps in eps_list:
        F, K, _, _ = manufacture_commuting_pair(h_unit * eps, alpha, grid, interval)
        operators.append(commutator_residual(F, K, grid).operator)
        averages.append(k2_average_probe(F, K, grid).average)
        logger.info("eps = %.3g: |L|_0 = %.3e, |[k2]|_0 = %.3e", eps, operators[-1], averages[-1])

    log_eps = np.log(eps_list)
    return {
        "eps": list(eps_list),
        "operator": operators,
        "k2_average": averages,
        "operator_slope": float(np.polyfit(log_eps, np.log(operators), 1)[0]),
        "k2_slope": float(np.polyfit(log_eps, np.log(averages), 1)[0]),
    }
