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

from ..funcspace import sample_on

# Values of f2 this small count as zero
ZERO_TOLERANCE = 1e-14


@dataclass(frozen=True)
class IntersectionReport:
    passed: bool
    margin: float
    y: np.ndarray
    minima: np.ndarray
    maxima: np.ndarray

    def __bool__(self):
        return self.passed

    def to_json(self):
        worst = int(np.argmin(np.minimum(self.maxima, -self.minima)))
        return {"passed": self.passed, "margin": self.margin, "worst_y": float(self.y[worst]), "circles": len(self.y)}


def intersection_check(F, grid=None, y_samples=64):
    """Does every sampled horizontal circle meet its image under F?

    The circle at height y meets its image exactly when x -> f2(x, y) has a zero, checked as min <= 0 <= max over a
    dense x lattice (f2 identically zero passes). The margin is the min over y of min(max f2, -min f2), positive
    when every circle changes sign and negative by the constant-sign offset otherwise.
    """
    grid = F.grid if grid is None else grid.on(F.domain)
    x, _ = grid.dense_axes()
    y = np.linspace(F.domain.lo, F.domain.hi, y_samples)

    values = sample_on(F.pert.c2, x, y)
    minima = np.min(values, axis=0)
    maxima = np.max(values, axis=0)

    passed = bool(np.all((minima <= ZERO_TOLERANCE) & (maxima >= -ZERO_TOLERANCE)))
    margin = float(np.min(np.minimum(maxima, -minima)))
    return IntersectionReport(passed, margin, y, minima, maxima)
