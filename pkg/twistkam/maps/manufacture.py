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

import numpy as np

from ..errors import ContractError
from ..funcspace import VectorFunction, fit_values
from .algebra import image_margin
from .base import Translation, Twist
from .cylinder_map import Conjugacy, CylinderMap


def fixture_generator(grid, c1_norm):
    """A smooth zero-average generator, h = a (sin 2 pi x (1 + y/2), cos 2 pi x (1 - y/3)), scaled to a C1 norm."""
    h = VectorFunction.fit(
        lambda x, y: np.sin(2 * np.pi * x) * (1 + y / 2),
        lambda x, y: np.cos(2 * np.pi * x) * (1 - y / 3),
        grid,
    )
    return h * (c1_norm / h.norm(1))


def manufacture_commuting_pair(h_gen, alpha, grid, interval):
    """Ground truth pair F = H o U0 o H^-1, K = H o T_alpha o H^-1 for H = id + h_gen, sampled on interval.

    Returns (F, K, H_true, W_true) with W_true = pi_1 o H^-1 the semi-conjugacy of K to the rotation.
    """
    from ..diagnostics.semiconjugacy import SemiConjugacy

    theta = h_gen.norm(1)
    if not theta < 0.125:
        raise ContractError("manufactured pairs need |h_gen|_1 < 1/8, got {:.4g}".format(theta))

    H = Conjugacy(h_gen, theta)
    lattice = grid.on(interval)
    X, Y = lattice.lattice()

    reach = H.sup_norm()
    image_margin(X, Y, H.domain.shrink(reach) if reach > 0 else H.domain, "fixture interval")
    zx, zy = H.inverse_points(X, Y)

    # F(w) = H(U0(z)) and K(w) = H(T_alpha(z)) for z = H^-1(w)
    fx, fy = H(zx + zy, zy)
    kx, ky = H(zx + alpha, zy)
    F = CylinderMap(Twist(), VectorFunction.fit_values(fx - (X + Y), fy - Y, lattice))
    K = CylinderMap(Translation(alpha), VectorFunction.fit_values(kx - (X + alpha), ky - Y, lattice))

    W = SemiConjugacy.from_v(fit_values(zx - X, lattice))
    return F, K, H, W
