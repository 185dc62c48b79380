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

from . import cylinder_function as cf
from .holder import holder_norm


@dataclass(frozen=True)
class VectorFunction:
    """A pair of cylinder functions on one grid, a perturbation (f1, f2) or a generator (h1, h2)."""

    c1: cf.CylinderFunction
    c2: cf.CylinderFunction

    def __post_init__(self):
        self.c1.grid.require_same(self.c2.grid)

    @staticmethod
    def zeros(grid):
        return VectorFunction(cf.zeros(grid), cf.zeros(grid))

    @staticmethod
    def fit(sampler1, sampler2, grid):
        return VectorFunction(cf.fit(sampler1, grid), cf.fit(sampler2, grid))

    @staticmethod
    def fit_values(values1, values2, grid):
        return VectorFunction(cf.fit_values(values1, grid), cf.fit_values(values2, grid))

    @property
    def grid(self):
        return self.c1.grid

    @property
    def interval(self):
        return self.c1.grid.interval

    def __iter__(self):
        return iter((self.c1, self.c2))

    def __call__(self, x, y):
        return cf.evaluate(self.c1, x, y), cf.evaluate(self.c2, x, y)

    def __add__(self, other):
        return VectorFunction(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        return VectorFunction(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return VectorFunction(-self.c1, -self.c2)

    def __mul__(self, c):
        return VectorFunction(self.c1 * c, self.c2 * c)

    __rmul__ = __mul__

    def map(self, fn):
        """Apply a function-space operation to each component."""
        return VectorFunction(fn(self.c1), fn(self.c2))

    def is_zero(self):
        return self.c1.is_zero() and self.c2.is_zero()

    def average_over_x(self):
        return self.map(cf.average_over_x)

    def refit_on_interval(self, target):
        return self.map(lambda f: cf.refit_on_interval(f, target))

    def sample_on(self, x_axis, y_axis):
        return cf.sample_on(self.c1, x_axis, y_axis), cf.sample_on(self.c2, x_axis, y_axis)

    def norm(self, r, **kwargs):
        return max(holder_norm(self.c1, r, **kwargs), holder_norm(self.c2, r, **kwargs))

    def to_json(self):
        return [cf.to_json(self.c1), cf.to_json(self.c2)]

    @staticmethod
    def from_json(blob):
        return VectorFunction(cf.from_json(blob[0]), cf.from_json(blob[1]))
