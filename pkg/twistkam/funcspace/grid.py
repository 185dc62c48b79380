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

from ..errors import ContractError, GridMismatchError
from .interval import Interval


@dataclass(frozen=True)
class GridSpec:
    """Resolution of a Fourier x Chebyshev representation on the cylinder T x interval.

    nx Fourier modes m in [-nx/2, nx/2) in the periodic variable, ny Chebyshev polynomials T_0..T_{ny-1} in the
    action variable.
    """

    nx: int
    ny: int
    interval: Interval

    def __post_init__(self):
        if self.nx < 8 or self.nx & (self.nx - 1) != 0:
            raise ContractError("nx must be a power of two and at least 8, got {}".format(self.nx))
        if self.ny < 4:
            raise ContractError("ny must be at least 4, got {}".format(self.ny))

    def on(self, interval):
        """The same resolution over another interval."""
        return GridSpec(self.nx, self.ny, interval)

    def require_same(self, other):
        if self != other:
            raise GridMismatchError(self, other)

    @property
    def modes(self):
        # Fourier indices in numpy fft order
        return np.fft.fftfreq(self.nx, 1.0 / self.nx).astype(int)

    @property
    def x_nodes(self):
        return np.arange(self.nx) / self.nx

    @property
    def unit_nodes(self):
        # Chebyshev-Gauss-Lobatto points, running from +1 down to -1
        return np.cos(np.pi * np.arange(self.ny) / (self.ny - 1))

    @property
    def y_nodes(self):
        return self.interval.from_unit(self.unit_nodes)

    def lattice(self):
        """Fitting lattice as (X, Y) arrays of shape (nx, ny)."""
        return np.meshgrid(self.x_nodes, self.y_nodes, indexing="ij")

    def dense_axes(self, oversample=4):
        """Uniform sampling axes used for sup-norms, endpoints of the interval included."""
        x = np.arange(oversample * self.nx) / (oversample * self.nx)
        y = np.linspace(self.interval.lo, self.interval.hi, oversample * self.ny)
        return x, y
