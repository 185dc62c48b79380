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

from dataclasses import dataclass

import numpy as np

from ..errors import ContractError
from ..funcspace import evaluate, holder_seminorm, lattice_sup, zeros
from ..maps.algebra import image_margin


@dataclass(frozen=True)
class SemiConjugacy:
    """W(x, y) = x + v(x, y) with W o K = R_alpha o W and a Lipschitz bound on W."""

    v: object
    lipschitz: float

    def __post_init__(self):
        if not self.lipschitz > 1:
            raise ContractError("semi-conjugacy Lipschitz bound must exceed 1, got {}".format(self.lipschitz))
        slope = self.slope()
        if slope > self.lipschitz:
            raise ContractError(
                "Lipschitz bound {:.4g} is below the measured slope {:.4g}".format(self.lipschitz, slope)
            )

    @staticmethod
    def from_v(v, padding=1.1):
        """Bound W by the measured slope of v, padded."""
        return SemiConjugacy(v, padding * (1.0 + holder_seminorm(v, 1.0)))

    @staticmethod
    def projection(grid, lipschitz=2.0):
        """pi_1(x, y) = x."""
        return SemiConjugacy(zeros(grid), lipschitz)

    @property
    def domain(self):
        return self.v.interval

    def slope(self):
        return 0.0 if self.v.is_zero() else holder_seminorm(self.v, 1.0)

    def __call__(self, x, y):
        return np.asarray(x, dtype=float) + evaluate(self.v, x, y)


def circle_distance(t):
    t = np.mod(np.asarray(t, dtype=float), 1.0)
    return np.minimum(t, 1.0 - t)


@dataclass(frozen=True)
class SemiConjugacyReport:
    residual: float
    slope: float
    lipschitz: float


def semiconjugacy_residual(W, K, alpha, grid):
    """Sup over a lattice of the circle distance of W(K(z)) - W(z) - alpha, with the measured slope of v."""
    common = W.domain.intersect(K.domain)
    reach = lattice_sup(K.pert.c2)
    target = common.shrink(reach) if reach > 0 else common

    X, Y = grid.on(target).lattice()
    kx, ky = K(X, Y)
    image_margin(kx, ky, W.domain, "K(target)")

    residual = float(np.max(circle_distance(W(kx, ky) - W(X, Y) - alpha)))
    return SemiConjugacyReport(residual, W.slope(), W.lipschitz)
