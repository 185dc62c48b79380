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

from ..errors import ContractError, NumericalError


def counterexample_functions(delta):
    """g and h, the components of psi(x + psi(x)) - psi(x) for psi(x) = (1/2 + delta sin 2 pi x, delta cos 2 pi x)."""

    def g(x):
        x = np.asarray(x, dtype=float)
        return np.sin(2 * np.pi * (x + 0.5 + delta * np.sin(2 * np.pi * x))) - np.sin(2 * np.pi * x)

    def h(x):
        x = np.asarray(x, dtype=float)
        return np.cos(2 * np.pi * (x + 0.5 + delta * np.sin(2 * np.pi * x))) - np.cos(2 * np.pi * x)

    return g, h


def torus_gap_scan(psi, n_per_axis):
    """min over a T^2 lattice of max |psi(x + psi(x)) - psi(x)|, the distance between a graph torus and its image.

    psi maps (x1, x2) arrays to its two components.
    """
    t = np.arange(n_per_axis) / n_per_axis
    X1, X2 = np.meshgrid(t, t, indexing="ij")
    p1, p2 = psi(X1, X2)
    q1, q2 = psi(X1 + p1, X2 + p2)
    gap = np.maximum(np.abs(q1 - p1), np.abs(q2 - p2))
    worst = np.unravel_index(int(np.argmin(gap)), gap.shape)
    return float(gap[worst]), (float(X1[worst]), float(X2[worst]))


def counterexample_2d(delta, n_scan, eta=0.0):
    """Scan the graph torus of psi for points it shares with its image under the twist on T^2 x R^2."""
    if not 0 < delta < 1 / (2 * np.pi):
        raise ContractError("delta must lie in (0, 1/(2 pi)), got {}".format(delta))

    g, h = counterexample_functions(delta)
    x = np.arange(n_scan) / n_scan
    gap = np.maximum(np.abs(g(x)), np.abs(h(x)))
    worst = int(np.argmin(gap))
    if not gap[worst] > 0:
        raise NumericalError("torus meets its image near x1 = {:.6g}".format(x[worst]))

    report = {
        "delta": delta,
        "n_scan": n_scan,
        "g0": float(g(0.0)),
        "h0": float(h(0.0)),
        "h_half": float(h(0.5)),
        "min_gap": float(gap[worst]),
        "argmin": float(x[worst]),
        "disjoint": True,
    }

    if eta > 0:
        # A perturbation depending on the second angle, small in C1
        def psi(x1, x2):
            return (
                0.5 + delta * np.sin(2 * np.pi * x1) + eta * np.sin(2 * np.pi * x2),
                delta * np.cos(2 * np.pi * x1) + eta * np.cos(2 * np.pi * x2),
            )

        n_axis = max(16, int(np.sqrt(n_scan)))
        perturbed, where = torus_gap_scan(psi, n_axis)
        report["perturbed"] = {"eta": eta, "min_gap": perturbed, "argmin": list(where), "disjoint": perturbed > 0}

    return report
