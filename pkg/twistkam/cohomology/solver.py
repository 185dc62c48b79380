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

from ..diophantine import check_diophantine, small_divisor
from ..errors import ContractError, DiophantineError, NumericalError, ResonanceError
from ..funcspace import CylinderFunction, VectorFunction, average_over_x, holder_norm, lattice_sup
from ..smoothing import smooth
from .operators import apply_delta_U0, apply_delta_alpha, translation_multiplier

logger = logging.getLogger(__name__)

# Divisors below this cannot be told apart from zero in double precision
RESONANCE_THRESHOLD = 1e-14

# Acceptable sup residual of the solved equation, relative to max(1, |phi|_0)
SOLVER_TOLERANCE = 1e-10


@dataclass(frozen=True)
class CohomologySolution:
    u: CylinderFunction
    residual_c0: float
    bound_ratio: float
    order: float = 0


def _check_divisors(grid, dio):
    modes = grid.modes
    resolved = np.flatnonzero((modes > 0) & (modes < grid.nx // 2))
    divisors = small_divisor(dio.alpha, modes[resolved])
    bad = np.flatnonzero(divisors < RESONANCE_THRESHOLD)
    if len(bad) > 0:
        raise ResonanceError(int(modes[resolved][bad[0]]), float(divisors[bad[0]]))

    check = check_diophantine(dio.alpha, dio.sigma, dio.tau, max(grid.nx // 2, 1))
    if not check.passed:
        raise DiophantineError(check.first_violation)


def solve_delta_alpha(phi, dio, r=0, bound=True):
    """Solve u o T_alpha - u = phi - [phi] for the zero-average u.

    Each Fourier mode is divided by its small divisor, the zero mode and the unresolved -nx/2 mode are set to zero.
    With bound set the ratio |u|_r / |phi|_(r + rho) is measured for comparison with the solver constant.
    """
    _check_divisors(phi.grid, dio)

    multiplier = translation_multiplier(phi.grid, dio.alpha)
    multiplier[0] = 1.0
    multiplier[phi.grid.nx // 2] = 1.0
    coeffs = phi.coeffs / multiplier[:, None]
    coeffs[0] = 0
    coeffs[phi.grid.nx // 2] = 0
    u = CylinderFunction(phi.grid, coeffs)

    # The residual is checked against the band the grid resolves
    residual = lattice_sup(apply_delta_alpha(u, dio.alpha) - (phi - average_over_x(phi)))
    scale = max(1.0, lattice_sup(phi))
    if residual > SOLVER_TOLERANCE * scale:
        raise NumericalError("cohomological residual {:.3e} exceeds tolerance".format(residual))

    ratio = float("nan")
    if bound:
        order = r + dio.rho
        if order <= phi.grid.ny / 4:
            denominator = holder_norm(phi, order)
            ratio = holder_norm(u, r) / denominator if denominator > 0 else 0.0
        else:
            logger.debug("Skipping bound ratio, order %s is beyond the grid resolution", order)

    return CohomologySolution(u, residual, ratio, r)


def solve_vector(phi, dio, bound=False):
    """Component-wise solve for a vector right hand side, returns the solution and the worst residual."""
    s1 = solve_delta_alpha(phi.c1, dio, bound=bound)
    s2 = solve_delta_alpha(phi.c2, dio, bound=bound)
    return VectorFunction(s1.u, s2.u), max(s1.residual_c0, s2.residual_c0)


def defect_N(xi, f, N, profile=None):
    """Defect of the common approximate solution, Delta_U0 xi - (S_N f - [S_N f])."""
    if xi.grid != f.grid:
        raise ContractError("defect needs xi and f on one grid")
    sf = f.map(lambda c: smooth(c, N, profile))
    return apply_delta_U0(xi) - (sf - sf.average_over_x())
