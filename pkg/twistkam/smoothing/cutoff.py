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

from ..errors import ContractError


def _quintic(u):
    return u ** 3 * (10.0 - 15.0 * u + 6.0 * u ** 2)


def _transition(u):
    # C-infinity step from 0 at u = 0 to 1 at u = 1
    with np.errstate(divide="ignore", over="ignore"):
        a = np.where(u > 0, np.exp(-1.0 / np.maximum(u, 1e-300)), 0.0)
        b = np.where(u < 1, np.exp(-1.0 / np.maximum(1.0 - u, 1e-300)), 0.0)
    return a / (a + b)


@dataclass(frozen=True)
class CutoffProfile:
    """Spectral cutoff chi with chi = 1 on [0, 1] and chi = 0 on [2, inf).

    kind "bump" composes the smooth exponential transition with the quintic smoothstep, kind "quintic" uses the
    smoothstep alone. y_scale stretches the Chebyshev cutoff.
    """

    kind: str = "bump"
    y_scale: float = 1.0

    def __post_init__(self):
        if self.kind not in ("bump", "quintic"):
            raise ContractError("Unknown cutoff kind '{}'".format(self.kind))
        if self.y_scale <= 0:
            raise ContractError("y_scale must be positive, got {}".format(self.y_scale))

    def chi(self, t):
        u = np.clip(np.abs(np.asarray(t, dtype=float)) - 1.0, 0.0, 1.0)
        q = _quintic(u)
        if self.kind == "quintic":
            return 1.0 - q
        return 1.0 - _transition(q)


DEFAULT_PROFILE = CutoffProfile()
