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

import numpy as np

from ..errors import ContractError, RangeError
from ..funcspace import VectorFunction, lattice_sup
from ..funcspace.interval import ENDPOINT_TOLERANCE
from .base import compose_bases
from .cylinder_map import Conjugacy, CylinderMap

logger = logging.getLogger(__name__)

# Image margins below this are reported
MARGIN_WARNING = 1e-6


def image_margin(x, y, interval, what):
    """Smallest distance of sampled images to the boundary of the interval, raises when any sample is outside."""
    d = interval.boundary_distance(y)
    worst = np.unravel_index(int(np.argmin(d)), d.shape)
    margin = float(d[worst])
    if margin < -ENDPOINT_TOLERANCE:
        raise RangeError((float(np.asarray(x)[worst]), float(y[worst])), interval, what)
    if margin < MARGIN_WARNING:
        logger.warning("%s sits %.3e from the boundary of %s", what, margin, interval)
    return margin


def compose(g, f, grid, target, declared_base=None):
    """g o f sampled on the lattice of target, the perturbation taken against the declared base."""
    lattice = grid.on(target)
    X, Y = lattice.lattice()

    wx, wy = f(X, Y)
    image_margin(wx, wy, g.domain, "image of f")
    gx, gy = g(wx, wy)

    base = declared_base if declared_base is not None else compose_bases(g.base, f.base)
    if base is None:
        base = g.base
    bx, by = base(X, Y)

    return CylinderMap(base, VectorFunction.fit_values(gx - bx, gy - by, lattice))


def _inversion_margin(H, target):
    return min(H.domain.margin(target), 0.5)


def invert_near_identity(H, grid, target):
    """Generator of H^-1 on target, computed pointwise by fixed point iteration and refit."""
    delta = _inversion_margin(H, target)
    if not H.c1_norm < delta:
        raise ContractError(
            "inversion needs C1 norm {:.4g} below the margin {:.4g} of {} over {}".format(
                H.c1_norm, delta, H.domain, target
            )
        )

    lattice = grid.on(target)
    X, Y = lattice.lattice()
    zx, zy = H.inverse_points(X, Y)
    return Conjugacy(VectorFunction.fit_values(zx - X, zy - Y, lattice))


def conjugate(F, H, grid, target):
    """H^-1 o F o H on target with the base of F kept, H^-1 evaluated pointwise."""
    if not H.domain.contains(target):
        raise ContractError("conjugation target {} is outside the domain {} of H".format(target, H.domain))

    lattice = grid.on(target)
    X, Y = lattice.lattice()

    # First link, H(target) inside the domain of F
    hx, hy = H(X, Y)
    try:
        image_margin(hx, hy, F.domain, "H(target)")
    except RangeError as e:
        raise ContractError("link H(target) -> domain of F failed: {}".format(e))

    # Second link, F(H(target)) inside the domain of H^-1
    wx, wy = F(hx, hy)
    reach = lattice_sup(H.gen.c2)
    inverse_domain = H.domain.shrink(reach) if reach > 0 else H.domain
    try:
        image_margin(wx, wy, inverse_domain, "F(H(target))")
    except RangeError as e:
        raise ContractError("link F(H(target)) -> domain of H^-1 failed: {}".format(e))

    vx, vy = H.inverse_points(wx, wy)
    bx, by = F.base(X, Y)
    return CylinderMap(F.base, VectorFunction.fit_values(vx - bx, vy - by, lattice))


def conjugacy_residuals(H, H_inv, grid):
    """Sup residuals of H o H^-1 - id on the domain of H^-1 and of H^-1 o H - id on a shrunk copy of it.

    Also returns the ratios |H^-1 - id|_r / |h|_r for r = 1, 2.
    """
    lattice = grid.on(H_inv.domain)
    X, Y = lattice.lattice()
    ix, iy = H_inv(X, Y)
    ax, ay = H(ix, iy)
    right = float(max(np.max(np.abs(ax - X)), np.max(np.abs(ay - Y))))

    inner = lattice.interval.shrink(H.sup_norm() + ENDPOINT_TOLERANCE) if H.sup_norm() > 0 else lattice.interval
    X, Y = grid.on(inner).lattice()
    hx, hy = H(X, Y)
    bx, by = H_inv(hx, hy)
    left = float(max(np.max(np.abs(bx - X)), np.max(np.abs(by - Y))))

    ratios = {}
    for r in (1, 2):
        h = H.gen.norm(r)
        ratios[r] = H_inv.gen.norm(r) / h if h > 0 else 0.0

    return {"right": right, "left": left, "ratios": ratios, "sup_ratio": H_inv.sup_norm() / max(H.sup_norm(), 1e-300)}
