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

from ..funcspace import CylinderFunction, VectorFunction, evaluate, fit_values


def translation_multiplier(grid, alpha):
    # exp(2 pi i m alpha) - 1 written as 2 i sin(pi m alpha) exp(i pi m alpha)
    phase = np.pi * grid.modes * alpha
    return 2j * np.sin(phase) * np.exp(1j * phase)


def _delta_alpha(f, alpha):
    return CylinderFunction(f.grid, f.coeffs * translation_multiplier(f.grid, alpha)[:, None])


def apply_delta_alpha(u, alpha):
    """u o T_alpha - u as an exact Fourier multiplier, component-wise for vector functions."""
    if isinstance(u, VectorFunction):
        return u.map(lambda f: _delta_alpha(f, alpha))
    return _delta_alpha(u, alpha)


def shear(f):
    """f o U0, that is f(x + y, y), sampled on the fitting lattice and refit."""
    X, Y = f.grid.lattice()
    return fit_values(evaluate(f, X + Y, Y), f.grid)


def apply_delta_U0(u):
    """(u1 o U0 - u1 - u2, u2 o U0 - u2)."""
    return VectorFunction(shear(u.c1) - u.c1 - u.c2, shear(u.c2) - u.c2)
