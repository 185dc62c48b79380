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
from numpy.polynomial import chebyshev

from .funcspace import fit, fit_values


def trig_chebyshev_corpus(grid, size=10, seed=0, max_mode=4, max_degree=4):
    """Random trigonometric x Chebyshev polynomials, sum of a_mj cos(2 pi m x + phase_mj) T_j(t).

    Members are returned as (f_id, CylinderFunction) pairs and are band limited well inside the grid.
    """
    rng = np.random.default_rng(seed)
    X, Y = grid.lattice()
    T = chebyshev.chebvander(grid.interval.to_unit(Y), max_degree)

    corpus = []
    for index in range(size):
        amplitude = rng.normal(size=(max_mode + 1, max_degree + 1)) / (1.0 + np.arange(max_mode + 1))[:, None] ** 2
        phase = rng.uniform(0.0, 2.0 * np.pi, size=(max_mode + 1, max_degree + 1))
        values = np.zeros_like(X)
        for m in range(max_mode + 1):
            for j in range(max_degree + 1):
                values += amplitude[m, j] * np.cos(2 * np.pi * m * X + phase[m, j]) * T[..., j]
        corpus.append(("poly{:02d}".format(index), fit_values(values, grid)))

    return corpus


def mode_ladder(grid, modes=None):
    """Pure Fourier modes sin(2 pi m x), the members that saturate the smoothing inequalities."""
    modes = range(1, grid.nx // 2) if modes is None else modes
    return [("mode{:02d}".format(m), fit(lambda x, y, m=m: np.sin(2 * np.pi * m * x), grid)) for m in modes]


def geometric_modes(grid, ratio=0.5):
    """sum over m >= 0 of ratio^m cos(2 pi m x), whose spectrum decays geometrically, times cos(y)."""

    def sampler(x, y):
        c = np.cos(2 * np.pi * x)
        return (1 - ratio * c) / (1 - 2 * ratio * c + ratio ** 2) * np.cos(y)

    return fit(sampler, grid)
