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

import logging

import numpy as np

from ..diophantine import rational_approximant
from ..funcspace import VectorFunction, fit
from .base import Twist
from .cylinder_map import CylinderMap

logger = logging.getLogger(__name__)


def standard_family(epsilon, q, r, grid):
    """S_eps(x, y) = (x + y + eps V'(x), y + eps V'(x)) with V'(x) = sin(2 pi q x) / (2 pi q)^r, over the twist."""
    amplitude = epsilon / (2.0 * np.pi * q) ** r
    kick = fit(lambda x, y: amplitude * np.sin(2.0 * np.pi * q * x), grid)
    return CylinderMap(Twist(), VectorFunction(kick, kick))


def rational_pair(p, q, epsilon, r, grid):
    """The commuting pair (S_eps, T_p/q), S_eps commutes with the rational rotation since V' has period 1/q."""
    return standard_family(epsilon, q, r, grid), CylinderMap.translation(p / q, grid)


def rational_counterexample(alpha, closeness, epsilon, r, grid):
    """A commuting pair arbitrarily close to (U0, T_alpha) that is not simultaneously linearizable.

    The rotation number is replaced by a convergent p/q within closeness of alpha.
    """
    c = rational_approximant(alpha, closeness)
    logger.info("Using the convergent %d/%d, |alpha - p/q| = %.3e", c.numerator, c.denominator, abs(alpha - float(c)))
    return rational_pair(c.numerator, c.denominator, epsilon, r, grid)
