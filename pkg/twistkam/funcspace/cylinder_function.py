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

from ..errors import ContractError, DomainError, SamplingError
from .grid import GridSpec
from .interval import ENDPOINT_TOLERANCE, Interval

# Points evaluated per block by the pointwise evaluator
EVALUATION_BLOCK = 4096

# Powers of i, so that (2 pi i m)^o keeps exact Hermitian symmetry
_I_POWERS = (1.0, 1.0j, -1.0, -1.0j)


def _values_to_chebyshev(values):
    """Chebyshev coefficients from values at the Gauss-Lobatto points cos(pi l / n), along the last axis.

    This is a type-I discrete cosine transform done through an FFT of the even extension.
    """
    n = values.shape[-1] - 1
    extended = np.concatenate([values, values[..., -2:0:-1]], axis=-1)
    coeffs = np.fft.fft(extended, axis=-1)[..., : n + 1] / n
    coeffs[..., 0] *= 0.5
    coeffs[..., n] *= 0.5
    return coeffs


def _mirror_rows(nx):
    # Row holding -m for each row holding m, in fft order
    return (-np.arange(nx)) % nx


def _hermitian(coeffs):
    nx = coeffs.shape[0]
    coeffs = 0.5 * (coeffs + np.conj(coeffs[_mirror_rows(nx)]))

    # The -nx/2 mode has no partner inside the band
    coeffs[nx // 2] = 0
    return coeffs


class CylinderFunction:
    """A real function on T x [lo, hi] stored as Fourier x Chebyshev coefficients.

    coeffs[k, j] multiplies exp(2 pi i m_k x) T_j(t) where m_k runs in numpy fft order over [-nx/2, nx/2) and t is y
    mapped affinely onto [-1, 1]. Instances are immutable.
    """

    __slots__ = ("grid", "coeffs")

    def __init__(self, grid, coeffs):
        coeffs = np.array(coeffs, dtype=complex)
        if coeffs.shape != (grid.nx, grid.ny):
            raise ContractError("coefficient shape {} does not match {}".format(coeffs.shape, grid))

        # Real valued functions only
        scale = max(1.0, float(np.max(np.abs(coeffs))))
        asymmetry = np.max(np.abs(coeffs - np.conj(coeffs[_mirror_rows(grid.nx)])))
        if asymmetry > 1e-12 * scale:
            raise ContractError("coefficients violate Hermitian symmetry by {:.3e}".format(asymmetry))

        coeffs.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("CylinderFunction is immutable")

    def __repr__(self):
        return "CylinderFunction(nx={}, ny={}, interval={})".format(self.grid.nx, self.grid.ny, self.grid.interval)

    @property
    def interval(self):
        return self.grid.interval

    def __call__(self, x, y):
        return evaluate(self, x, y)

    def __add__(self, other):
        return algebra(self, other, "add")

    def __sub__(self, other):
        return algebra(self, other, "sub")

    def __neg__(self):
        return algebra(self, None, "scale", -1.0)

    def __mul__(self, c):
        return algebra(self, None, "scale", c)

    __rmul__ = __mul__

    def is_zero(self):
        return not np.any(self.coeffs)


def zeros(grid):
    return CylinderFunction(grid, np.zeros((grid.nx, grid.ny), dtype=complex))


def constant(grid, value):
    coeffs = np.zeros((grid.nx, grid.ny), dtype=complex)
    coeffs[0, 0] = value
    return CylinderFunction(grid, coeffs)


def fit_values(values, grid):
    """Coefficients from samples on the fitting lattice of the grid (shape (nx, ny))."""
    values = np.asarray(values)
    coeffs = np.fft.fft(values, axis=0) / grid.nx
    coeffs = _values_to_chebyshev(coeffs)
    return CylinderFunction(grid, _hermitian(coeffs))


def fit(sampler, grid):
    """Fit a sampler to the grid.

    The sampler is called once with the lattice arrays (X, Y) of shape (nx, ny) and must broadcast like a numpy
    ufunc. It is assumed 1-periodic in x.
    """
    X, Y = grid.lattice()
    values = np.broadcast_to(np.asarray(sampler(X, Y), dtype=float), X.shape)

    bad = np.argwhere(~np.isfinite(values))
    if len(bad) > 0:
        k, l = bad[0]
        raise SamplingError(X[k, l], Y[k, l], values[k, l])

    return fit_values(values, grid)


def _clenshaw(a, t):
    # Sum_j a[:, j] T_j(t) with a per-point coefficient row
    b1 = np.zeros_like(a[:, 0])
    b2 = np.zeros_like(a[:, 0])
    for j in range(a.shape[1] - 1, 0, -1):
        b1, b2 = a[:, j] + 2 * t * b1 - b2, b1
    return a[:, 0] + t * b1 - b2


def evaluate(f, x, y):
    """Evaluate at arbitrary points, x any real (reduced mod 1), y inside the grid interval."""
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    f.interval.require(y)

    shape = x.shape
    x = np.mod(x.ravel(), 1.0)
    t = np.clip(f.interval.to_unit(y.ravel()), -1.0, 1.0)
    modes = f.grid.modes

    out = np.empty(x.size)
    for start in range(0, x.size, EVALUATION_BLOCK):
        block = slice(start, start + EVALUATION_BLOCK)
        waves = np.exp(2j * np.pi * np.outer(x[block], modes))
        out[block] = np.real(_clenshaw(waves @ f.coeffs, t[block]))

    out = out.reshape(shape)
    return float(out) if out.ndim == 0 else out


def sample_on(f, x_axis, y_axis):
    """Separable evaluation on the tensor lattice x_axis by y_axis, result shape (len(x_axis), len(y_axis))."""
    x_axis = np.asarray(x_axis, dtype=float)
    y_axis = np.asarray(y_axis, dtype=float)
    f.interval.require(y_axis)

    waves = np.exp(2j * np.pi * np.outer(np.mod(x_axis, 1.0), f.grid.modes))
    t = np.clip(f.interval.to_unit(y_axis), -1.0, 1.0)
    return np.real(waves @ f.coeffs @ chebyshev.chebvander(t, f.grid.ny - 1).T)


def derivative(f, ox, oy):
    """Partial derivative d^ox/dx^ox d^oy/dy^oy, spectrally."""
    if ox < 0 or oy < 0 or ox + oy > f.grid.ny // 2:
        guard = f.grid.ny // 2
        raise ContractError("derivative order ({}, {}) exceeds the resolution guard ny/2 = {}".format(ox, oy, guard))

    coeffs = np.array(f.coeffs)
    if ox > 0:
        multiplier = (2 * np.pi * f.grid.modes.astype(float)) ** ox * _I_POWERS[ox % 4]
        coeffs = coeffs * multiplier[:, None]
    if oy > 0:
        coeffs = chebyshev.chebder(coeffs, m=oy, scl=1.0 / f.interval.halfwidth, axis=1)
        coeffs = np.pad(coeffs, ((0, 0), (0, f.grid.ny - coeffs.shape[1])))

    return CylinderFunction(f.grid, coeffs)


def average_over_x(f):
    """The x-average [f](y), exact in coefficient space."""
    coeffs = np.zeros_like(f.coeffs)
    coeffs[0] = f.coeffs[0]
    return CylinderFunction(f.grid, coeffs)


def refit_on_interval(f, target):
    """Resample on the Chebyshev nodes of a sub-interval and refit."""
    if not f.interval.contains(target, ENDPOINT_TOLERANCE):
        worst = target.lo if target.lo < f.interval.lo else target.hi
        raise DomainError(worst, f.interval, "target {} is not contained in {}".format(target, f.interval))

    grid = f.grid.on(target)
    t = np.clip(f.interval.to_unit(grid.y_nodes), -1.0, 1.0)

    # Every Fourier row is a Chebyshev series, evaluate rows at the new nodes and transform back
    values = f.coeffs @ chebyshev.chebvander(t, f.grid.ny - 1).T
    return CylinderFunction(grid, _hermitian(_values_to_chebyshev(values)))


def algebra(f, g, op, c=None):
    """Coefficient-wise add, sub and scale(c)."""
    if op == "scale":
        return CylinderFunction(f.grid, f.coeffs * c)

    if not isinstance(g, CylinderFunction):
        # Plain numbers act as constant functions
        g = constant(f.grid, float(g))
    f.grid.require_same(g.grid)

    if op == "add":
        return CylinderFunction(f.grid, f.coeffs + g.coeffs)
    elif op == "sub":
        return CylinderFunction(f.grid, f.coeffs - g.coeffs)
    else:
        raise ContractError("Unknown algebra operation '{}'".format(op))


def to_json(f):
    # Rows ordered by ascending m from -nx/2
    coeffs = np.fft.fftshift(f.coeffs, axes=0).ravel()
    return {
        "nx": f.grid.nx,
        "ny": f.grid.ny,
        "lo": f.interval.lo,
        "hi": f.interval.hi,
        "coeffs": [[float(c.real), float(c.imag)] for c in coeffs],
    }


def from_json(blob):
    grid = GridSpec(int(blob["nx"]), int(blob["ny"]), Interval(float(blob["lo"]), float(blob["hi"])))
    pairs = np.asarray(blob["coeffs"], dtype=float).reshape(grid.nx, grid.ny, 2)
    coeffs = np.fft.ifftshift(pairs[..., 0] + 1j * pairs[..., 1], axes=0)
    return CylinderFunction(grid, coeffs)
