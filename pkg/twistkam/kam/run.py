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

from tqdm import tqdm

from ..diagnostics import SemiConjugacy, commutator_residual, intersection_check, semiconjugacy_residual
from ..errors import ContractError, DomainExhausted, EngineError
from ..funcspace import VectorFunction, fit_values, lattice_sup
from ..maps import Conjugacy, Translation, Twist, conjugate, image_margin
from .state import (
    CONVERGED,
    DOMAIN_EXHAUSTED,
    HYPOTHESIS_VIOLATED,
    MAX_ITERATIONS,
    STEP_FAILURE,
    KamResult,
    KamState,
)
from .step import c0_size, kam_step, measure

logger = logging.getLogger(__name__)

# Final conjugation residuals must sit below this multiple of the stopping tolerance
RESIDUAL_FACTOR = 10.0


def _probe(name, fn):
    # A probe that cannot be evaluated counts as a failed hypothesis
    try:
        return fn()
    except EngineError as e:
        logger.warning("Pre-flight %s could not be evaluated: %s", name, e)
        return {"passed": False, "error": str(e)}


def preflight(F, K, W0, config):
    """Evaluate every hypothesis of the iteration, in order diophantine, commutation, intersection, semi-conjugacy.

    Nothing is mutated. Returns the checks as a dict and the name of the first failed one (None when all pass).
    """
    grid = config.grid
    dio = config.dio

    def diophantine():
        check = dio.check()
        return {"passed": check.passed, "first_violation": check.first_violation, "bound": check.bound}

    def commutation():
        report = commutator_residual(F, K, grid)
        return {
            "passed": report.direct <= config.commute_tol,
            "direct": report.direct,
            "operator": report.operator,
            "composition": report.composition,
        }

    def intersection():
        report = intersection_check(F)
        return {"passed": report.passed, "margin": report.margin}

    def semiconjugacy():
        if W0 is None:
            return {"passed": False, "error": "no semi-conjugacy given"}
        report = semiconjugacy_residual(W0, K, dio.alpha, grid)
        return {
            "passed": report.residual <= config.semiconjugacy_tol,
            "residual": report.residual,
            "slope": report.slope,
            "lipschitz": report.lipschitz,
        }

    checks = {}
    for name, fn in (
        ("diophantine", diophantine),
        ("commutation", commutation),
        ("intersection", intersection),
        ("semiconjugacy", semiconjugacy),
    ):
        checks[name] = _probe(name, fn)

    failed = next((name for name, check in checks.items() if not check["passed"]), None)
    return checks, failed


def compose_conjugacy(h_stack, grid, target):
    """H1 o H2 o ... o Hl sampled on the lattice of target and refit, the identity for an empty stack."""
    lattice = grid.on(target)
    if len(h_stack) == 0:
        return Conjugacy.identity(lattice)

    X, Y = lattice.lattice()
    zx, zy = X, Y
    for depth, H in enumerate(reversed(h_stack)):
        image_margin(zx, zy, H.domain, "chain link {}".format(len(h_stack) - depth))
        zx, zy = H(zx, zy)

    total = Conjugacy(VectorFunction.fit_values(zx - X, zy - Y, lattice))
    logger.info("Composed %d conjugacies on %s, C1 norm %.4g", len(h_stack), target, total.c1_norm)
    return total


def _certify(F, K, H_total, config):
    """Sup residuals of H^-1 o F o H - U0 and H^-1 o K o H - T_alpha on T x I_(delta0 / 2).

    The certificate shrinks to half the final width when the run ended below delta0.
    """
    delta_final = H_total.domain.margin(config.interval)
    target = config.domain(0.5 * min(config.delta0, delta_final))
    F_lin = conjugate(F, H_total, config.grid, target)
    K_lin = conjugate(K, H_total, config.grid, target)
    return {
        "F": max(lattice_sup(F_lin.pert.c1), lattice_sup(F_lin.pert.c2)),
        "K": max(lattice_sup(K_lin.pert.c1), lattice_sup(K_lin.pert.c2)),
        "target": [target.lo, target.hi],
    }


def _start(F, K, config):
    domain = config.domain(config.delta0)
    for name, m in (("F", F), ("K", K)):
        if not m.domain.contains(domain):
            raise ContractError("{} is defined on {}, the iteration needs {}".format(name, m.domain, domain))

    f = F.pert if F.domain == domain else F.pert.refit_on_interval(domain)
    k = K.pert if K.domain == domain else K.pert.refit_on_interval(domain)
    return f, k


def run(F, K, W0, config):
    """Iterate conjugation steps until the perturbation drops below tol_e0 or a terminal status is reached.

    F must be a perturbation of the twist and K of the translation by config.dio.alpha, reduce frequency twists
    first. The hypotheses are checked before anything else and a failed one returns without iterating.
    """
    if not isinstance(F.base, Twist):
        raise ContractError("the iteration needs F over the twist U0, got {!r}".format(F.base))
    if not isinstance(K.base, Translation) or K.base.alpha != config.dio.alpha:
        raise ContractError("the iteration needs K over the translation by alpha = {}".format(config.dio.alpha))

    f, k = _start(F, K, config)
    lipschitz = config.lipschitz0 if W0 is None else max(config.lipschitz0, W0.lipschitz)
    initial = measure(0, float("nan"), config.delta0, f, k, 0.0, lipschitz, config.dio.mu)
    state = KamState(0, config.delta0, f, k, (), lipschitz, (initial,))

    checks, failed = preflight(F, K, W0, config)
    if failed is not None:
        logger.error("Hypothesis '%s' is violated, not iterating", failed)
        return KamResult(HYPOTHESIS_VIOLATED, state, detail=failed, preflight=checks)

    status = MAX_ITERATIONS
    detail = ""
    E0 = initial.E0
    with tqdm(total=config.max_iter, desc="KAM", dynamic_ncols=True, disable=not config.progress) as progress:
        while E0 >= config.tol_e0 and state.i < config.max_iter:
            try:
                state = kam_step(state, config)
            except DomainExhausted as e:
                status, detail = DOMAIN_EXHAUSTED, str(e)
                break
            except EngineError as e:
                status, detail = STEP_FAILURE, str(e)
                break

            E0 = c0_size(state.f, state.k)
            progress.set_postfix(E0="{:.3e}".format(E0), delta="{:.4g}".format(state.delta))
            progress.update()

    if status in (DOMAIN_EXHAUSTED, STEP_FAILURE):
        logger.error("Iteration stopped at step %d: %s", state.i + 1, detail)
        return KamResult(status, state, detail=detail, preflight=checks)
    if E0 >= config.tol_e0:
        logger.warning("No convergence after %d steps, E0 = %.3e", state.i, E0)
        return KamResult(MAX_ITERATIONS, state, preflight=checks)

    try:
        H_total = compose_conjugacy(state.h_stack, config.grid, config.domain(state.delta))
        residuals = _certify(F, K, H_total, config)
    except EngineError as e:
        return KamResult(STEP_FAILURE, state, detail="certification failed: {}".format(e), preflight=checks)

    threshold = RESIDUAL_FACTOR * config.tol_e0
    residuals["threshold"] = threshold
    if max(residuals["F"], residuals["K"]) > threshold:
        detail = "conjugation residuals {:.3e}, {:.3e} exceed {:.3e}".format(residuals["F"], residuals["K"], threshold)
        return KamResult(STEP_FAILURE, state, H_total, detail, checks, residuals)

    logger.info("Converged after %d steps, residuals %.3e and %.3e", state.i, residuals["F"], residuals["K"])
    return KamResult(CONVERGED, state, H_total, "", checks, residuals)


def final_semiconjugacy(result, W0, grid):
    """W = W0 o H_total, the semi-conjugacy of the linearized K to the rotation, on the domain of H_total."""
    if result.H_total is None:
        raise ContractError("semi-conjugacy update needs a converged run")

    H = result.H_total
    lattice = grid.on(H.domain)
    X, Y = lattice.lattice()
    hx, hy = H(X, Y)
    image_margin(hx, hy, W0.domain, "H_total")

    v = fit_values(W0(hx, hy) - X, lattice)
    W = SemiConjugacy.from_v(v)
    bound = result.final_state.lipschitz
    if W.slope() > bound:
        logger.warning("Updated semi-conjugacy slope %.4g exceeds the ledger bound %.4g", W.slope(), bound)
        return W
    return SemiConjugacy(v, bound)
