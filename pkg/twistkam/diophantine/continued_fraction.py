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

from fractions import Fraction

import numpy as np

from ..errors import ContractError


def partial_quotients(alpha, n):
    """The first n partial quotients [a0; a1, a2, ...] of alpha, stopping early when alpha is (numerically) rational."""
    quotients = []
    x = float(alpha)
    for _ in range(n):
        a = int(np.floor(x))
        quotients.append(a)
        frac = x - a
        if frac < 1e-12:
            break
        x = 1.0 / frac
    return quotients


def convergents(alpha, n):
    """Convergents p/q of alpha from its continued fraction."""
    p, p_prev = 1, 0
    q, q_prev = 0, 1
    out = []
    for a in partial_quotients(alpha, n):
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Fraction(p, q))
    return out


def rational_approximant(alpha, epsilon, max_terms=64):
    """A convergent p/q with 0 < |alpha - p/q| < epsilon."""
    if epsilon <= 0:
        raise ContractError("epsilon must be positive, got {}".format(epsilon))

    for c in convergents(alpha, max_terms):
        gap = abs(alpha - float(c))
        if 0 < gap < epsilon and 0 < c < 1:
            return c

    raise ContractError("no convergent of {} within {} found in {} terms".format(alpha, epsilon, max_terms))
