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
from .cylinder_function import derivative, evaluate, sample_on

# Oversampling of the sup-norm lattice relative to the fitting grid
OVERSAMPLE = 4

# Default number of random point pairs for Holder seminorm estimates
DEFAULT_PAIRS = 4096


def lattice_sup(f, oversample=OVERSAMPLE):
    x, y = f.grid.dense_axes(oversample)
    return float(np.max(np.abs(sample_on(f, x, y))))


def holder_seminorm(f, lam, order=(0, 0), n_pairs=DEFAULT_PAIRS, seed=0, oversample=OVERSAMPLE):
    """Lower-bound estimate of sup |g(z) - g(z')| / |z - z'|^lam over 0 < |z - z'| <= 1 for g = d^order f.

    The supremum is taken over randomised pairs at log-uniform separations and over the nearest neighbours of the
    sup-norm lattice, so the returned value never exceeds the true seminorm.
    """
    g = derivative(f, *order) if order != (0, 0) else f
    interval = f.interval
    rng = np.random.default_rng(seed)

    # Random pairs, the partner is clipped back into the interval and the true distance recomputed
    x0 = rng.uniform(0.0, 1.0, n_pairs)
    y0 = rng.uniform(interval.lo, interval.hi, n_pairs)
    angle = rng.uniform(0.0, 2.0 * np.pi, n_pairs)
    radius = 10.0 ** rng.uniform(-4.0, 0.0, n_pairs)
    x1 = x0 + radius * np.cos(angle)
    y1 = np.clip(y0 + radius * np.sin(angle), interval.lo, interval.hi)
    distance = np.hypot(x1 - x0, y1 - y0)
    keep = (distance > 0) & (distance <= 1)

    best = 0.0
    if np.any(keep):
        dg = np.abs(evaluate(g, x1[keep], y1[keep]) - evaluate(g, x0[keep], y0[keep]))
        best = float(np.max(dg / distance[keep] ** lam))

    # Neighbouring lattice points
    x, y = f.grid.dense_axes(oversample)
    values = sample_on(g, x, y)
    hx = x[1] - x[0]
    hy = y[1] - y[0]
    best = max(best, float(np.max(np.abs(np.diff(values, axis=0)))) / hx ** lam)
    best = max(best, float(np.max(np.abs(np.diff(values, axis=1)))) / hy ** lam)

    return best


def holder_norm(f, r, n_pairs=DEFAULT_PAIRS, seed=0, oversample=OVERSAMPLE):
    """C^r norm of a cylinder function.

    For integer r this is the max over |J| <= r of the lattice sup of d^J f. For r = p + lam with 0 < lam < 1 the
    lam-Holder seminorms of every order p derivative are added to the max; those are estimated from below by
    holder_seminorm so the fractional norm is a lower-bound estimator.
    """
    if r < 0 or r > f.grid.ny / 4:
        raise ContractError("norm order {} exceeds the resolution guard ny/4 = {}".format(r, f.grid.ny / 4))
    if f.is_zero():
        return 0.0

    p = int(np.floor(r + 1e-12))
    lam = r - p

    x, y = f.grid.dense_axes(oversample)
    best = 0.0
    for total in range(p + 1):
        for ox in range(total + 1):
            d = derivative(f, ox, total - ox)
            best = max(best, float(np.max(np.abs(sample_on(d, x, y)))))

    if lam > 1e-12:
        for ox in range(p + 1):
            seminorm = holder_seminorm(f, lam, (ox, p - ox), n_pairs=n_pairs, seed=seed, oversample=oversample)
            best = max(best, seminorm)

    return best
