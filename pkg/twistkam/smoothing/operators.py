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
from ..funcspace import CylinderFunction
from .cutoff import DEFAULT_PROFILE


def multipliers(grid, N, profile=None):
    """The separable multiplier of S_N as (Fourier factor per row, Chebyshev factor per column)."""
    profile = DEFAULT_PROFILE if profile is None else profile

    # The Chebyshev index is matched to the physical frequency 2 pi N over the interval length
    y_cut = profile.y_scale * 2.0 * np.pi * N * grid.interval.length
    return profile.chi(np.abs(grid.modes) / N), profile.chi(np.arange(grid.ny) / y_cut)


def smooth(f, N, profile=None):
    """S_N f, a C-infinity multiplier on both spectral indices."""
    if not N > 1:
        raise ContractError("smoothing parameter N must exceed 1, got {}".format(N))
    mx, my = multipliers(f.grid, N, profile)
    return CylinderFunction(f.grid, f.coeffs * np.outer(mx, my))


def remainder(f, N, profile=None):
    """R_N f = f - S_N f."""
    return f - smooth(f, N, profile)
