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

from dataclasses import dataclass, field

import numpy as np

from ..errors import ContractError, ConvergenceError
from ..funcspace import VectorFunction, lattice_sup
from .base import Identity, Translation, Twist, base_from_json

# Fixed point inversion of near identity maps
INVERSION_TOLERANCE = 1e-13
INVERSION_MAX_ITERATIONS = 200


@dataclass(frozen=True)
class CylinderMap:
    """A map of T x I homotopic to the identity, base(x, y) + (pert1, pert2)(x, y).

    The first output coordinate is a lift to R, reduce it mod 1 where a point of T is needed.
    """

    base: object
    pert: VectorFunction

    @staticmethod
    def identity(grid):
        return CylinderMap(Identity(), VectorFunction.zeros(grid))

    @staticmethod
    def translation(alpha, grid):
        return CylinderMap(Translation(alpha), VectorFunction.zeros(grid))

    @staticmethod
    def twist(grid):
        return CylinderMap(Twist(), VectorFunction.zeros(grid))

    @property
    def domain(self):
        return self.pert.interval

    @property
    def grid(self):
        return self.pert.grid

    def __call__(self, x, y):
        p1, p2 = self.pert(x, y)
        bx, by = self.base(x, y)
        return bx + p1, by + p2

    def with_pert(self, pert):
        return CylinderMap(self.base, pert)

    def to_json(self):
        return {
            "base": self.base.to_json(),
            "pert": self.pert.to_json(),
            "interval": {"lo": self.domain.lo, "hi": self.domain.hi},
        }

    @staticmethod
    def from_json(blob, build_frequency=None):
        return CylinderMap(base_from_json(blob["base"], build_frequency), VectorFunction.from_json(blob["pert"]))


@dataclass(frozen=True)
class Conjugacy:
    """H = id + h for a generator h with small C1 norm, defined on the generator's interval."""

    gen: VectorFunction
    c1_norm: float = field(default=None)

    def __post_init__(self):
        if self.c1_norm is None:
            object.__setattr__(self, "c1_norm", self.gen.norm(1))
        if not self.c1_norm < 0.25:
            raise ContractError("conjugacy generator has C1 norm {:.4g}, inversion needs < 1/4".format(self.c1_norm))

    @staticmethod
    def identity(grid):
        return Conjugacy(VectorFunction.zeros(grid), 0.0)

    @property
    def domain(self):
        return self.gen.interval

    @property
    def grid(self):
        return self.gen.grid

    def __call__(self, x, y):
        h1, h2 = self.gen(x, y)
        return np.asarray(x, dtype=float) + h1, np.asarray(y, dtype=float) + h2

    def sup_norm(self):
        return max(lattice_sup(self.gen.c1), lattice_sup(self.gen.c2))

    def inverse_points(self, wx, wy, tol=INVERSION_TOLERANCE, max_iterations=INVERSION_MAX_ITERATIONS):
        """Solve z + h(z) = w pointwise by the contraction z <- w - h(z)."""
        wx = np.asarray(wx, dtype=float)
        wy = np.asarray(wy, dtype=float)
        if self.gen.is_zero():
            return wx, wy

        zx, zy = wx, wy
        step = np.inf
        for _ in range(max_iterations):
            h1, h2 = self.gen(zx, zy)
            nx, ny = wx - h1, wy - h2
            step = float(max(np.max(np.abs(nx - zx)), np.max(np.abs(ny - zy))))
            zx, zy = nx, ny
            if step < tol:
                return zx, zy

        raise ConvergenceError(max_iterations, step)

    def to_json(self):
        return {"gen": self.gen.to_json(), "c1_norm": self.c1_norm}
