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
import time
from dataclasses import replace

from ..cohomology import apply_delta_alpha, solve_vector
from ..diagnostics import intersection_check
from ..errors import ContractError, DomainExhausted, NumericalError
from ..funcspace import VectorFunction, average_over_x, lattice_sup
from ..maps import Conjugacy, CylinderMap, Translation, Twist, conjugate
from ..smoothing import smooth
from .state import KamState, StepRecord

logger = logging.getLogger(__name__)

# Residual accepted for the solved linearized equation, relative to max(1, |S_N k|_0)
BUILD_TOLERANCE = 1e-10


def schedule_N(E_prev0, rho):
    """N = E^(-1/(4 (rho + 1))), greater than 1 for 0 < E < 1."""
    if not 0 < E_prev0 < 1:
        raise ContractError("perturbation size {:.4g} is outside (0, 1), no smoothing scale exists".format(E_prev0))
    return float(E_prev0 ** (-1.0 / (4.0 * (rho + 1))))


def c0_size(f, k):
    return max(lattice_sup(c) for c in (f.c1, f.c2, k.c1, k.c2))


def mu_effective(mu, grid):
    """The high norm order the grid can resolve."""
    return int(min(mu, grid.ny // 4))


def joint_vector_norm(f, k, r):
    return max(f.norm(r), k.norm(r))


def build_h(f, k, dio, N, profile=None):
    """Generator of the step conjugacy, h = (xi1, -[S_N f1] + xi2) with Delta_alpha xi = S_N k - [S_N k]."""
    if f.is_zero() and k.is_zero():
        return VectorFunction.zeros(f.grid)

    sk = k.map(lambda c: smooth(c, N, profile))
    xi, _ = solve_vector(sk, dio)
    sf1 = smooth(f.c1, N, profile)
    h = VectorFunction(xi.c1, xi.c2 - average_over_x(sf1))

    rhs = sk - sk.average_over_x()
    defect = apply_delta_alpha(h, dio.alpha) - rhs
    residual = max(lattice_sup(defect.c1), lattice_sup(defect.c2))
    scale = max(1.0, lattice_sup(sk.c1), lattice_sup(sk.c2))
    if residual > BUILD_TOLERANCE * scale:
        raise NumericalError("step generator residual {:.3e} exceeds tolerance".format(residual))

    return h


def measure(i, N, delta, f, k, theta, lipschitz, mu, wall_ms=0.0, generator_constant=float("nan")):
    """Ledger row for the perturbations (f, k) reached at step i."""
    grid = f.grid
    mu_eff = mu_effective(mu, grid)
    E0 = c0_size(f, k)
    E1 = joint_vector_norm(f, k, 1)
    Emu = joint_vector_norm(f, k, mu_eff)

    # Empirical constant of |.|_1 <= C |.|_0^(1 - 1/mu) |.|_mu^(1/mu)
    interpolation = float("nan")
    if E0 > 0 and Emu > 0:
        interpolation = E1 / (E0 ** (1 - 1.0 / mu_eff) * Emu ** (1.0 / mu_eff))

    return StepRecord(
        i=i,
        N=N,
        delta=delta,
        E0=E0,
        Emu=Emu,
        U1=theta,
        generator_constant=generator_constant,
        lipschitz=lipschitz,
        f2_average=lattice_sup(average_over_x(f.c2)),
        k1_average=lattice_sup(average_over_x(k.c1)),
        k2_average=lattice_sup(average_over_x(k.c2)),
        intersection_margin=intersection_check(CylinderMap(Twist(), f)).margin,
        interpolation_constant=interpolation,
        mu_effective=mu_eff,
        wall_ms=wall_ms,
    )


def ledger_flags(record, previous, delta0):
    """Decay checks of the iteration, logged when they fail and never enforced."""
    i = record.i
    flags = {
        "decay": record.E0 <= previous.E0 ** 1.25,
        "generator_bound": record.U1 <= previous.E0 ** 0.5,
        "high_norm": record.E0 == 0 or record.Emu <= 1.0 / record.E0,
        "delta_floor": record.delta >= delta0 / 2 + delta0 / 2 ** (i + 1),
    }
    for name, ok in flags.items():
        if not ok:
            logger.warning("Step %d: ledger check '%s' fails (E0 %.3e -> %.3e)", i, name, previous.E0, record.E0)
    return flags


def kam_step(state, config):
    """One conjugation step, returns the state on the shrunk domain T x I_delta~."""
    start = time.perf_counter()
    f, k = state.f, state.k
    dio = config.dio
    E_prev = c0_size(f, k)

    if E_prev == 0:
        logger.info("Step %d: perturbation vanishes, nothing to do", state.i + 1)
        return KamState(state.i + 1, state.delta, f, k, state.h_stack, state.lipschitz, state.history)

    N = schedule_N(E_prev, dio.rho)
    h = build_h(f, k, dio, N, config.profile)
    theta = h.norm(1)

    delta = state.delta - 2 * theta - E_prev
    if not delta > 0:
        raise DomainExhausted(delta)

    H = Conjugacy(h, theta)
    target = config.domain(delta)
    grid = f.grid
    F_new = conjugate(CylinderMap(Twist(), f), H, grid, target)
    K_new = conjugate(CylinderMap(Translation(dio.alpha), k), H, grid, target)

    # Empirical constant of |h|_1 <= C N^(1 + rho) E
    generator_constant = theta / (N ** (1 + dio.rho) * E_prev)

    lipschitz = state.lipschitz * (1 + 2 * theta)
    wall_ms = 1000.0 * (time.perf_counter() - start)
    record = measure(
        state.i + 1, N, delta, F_new.pert, K_new.pert, theta, lipschitz, dio.mu, wall_ms, generator_constant
    )
    if state.last is not None:
        record = replace(record, flags=ledger_flags(record, state.last, config.delta0))

    logger.info("Step %d: N = %.4g, delta = %.4g, E0 = %.3e, U1 = %.3e", record.i, N, delta, record.E0, theta)
    return KamState(
        state.i + 1,
        delta,
        F_new.pert,
        K_new.pert,
        state.h_stack + (H,),
        lipschitz,
        state.history + (record,),
    )
