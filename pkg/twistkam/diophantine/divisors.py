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
from dataclasses import dataclass

import numpy as np

from ..errors import ContractError, DegenerateError

logger = logging.getLogger(__name__)

# alpha closer than this to a rational p/q counts as that rational
RATIONAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DiophantineCheck:
    passed: bool
    first_violation: int
    bound: int

    def __bool__(self):
        return self.passed


def small_divisor(alpha, m):
    """|exp(2 pi i m alpha) - 1|, computed as 2 |sin(pi m alpha)|."""
    m = np.asarray(m)
    if np.any(m == 0):
        raise ContractError("small divisor requested for m = 0")
    d = 2.0 * np.abs(np.sin(np.pi * m * alpha))
    return float(d) if d.ndim == 0 else d


def check_diophantine(alpha, sigma, tau, M):
    """Scan 0 < |m| <= M for |exp(2 pi i m alpha) - 1| >= sigma / |m|^tau.

    Only positive m are scanned, the divisor is even in m.
    """
    if M < 1:
        raise ContractError("diophantine check bound must be at least 1, got {}".format(M))

    m = np.arange(1, int(M) + 1)
    failed = np.flatnonzero(small_divisor(alpha, m) * m.astype(float) ** tau < sigma)
    if len(failed) > 0:
        return DiophantineCheck(False, int(m[failed[0]]), int(M))
    return DiophantineCheck(True, 0, int(M))


def nearest_rational(alpha, M):
    """The first p/q with q <= M within the rational tolerance of alpha, or None."""
    q = np.arange(1, int(M) + 1)
    p = np.rint(q * alpha)
    close = np.flatnonzero(np.abs(q * alpha - p) < RATIONAL_TOLERANCE * q)
    if len(close) > 0:
        return int(p[close[0]]), int(q[close[0]])
    return None


def record_minima(alpha, M):
    """The m <= M at which the small divisor reaches a new minimum, with the divisors there."""
    m = np.arange(1, int(M) + 1)
    d = small_divisor(alpha, m)
    running = np.minimum.accumulate(d)
    is_record = np.concatenate([[True], d[1:] < running[:-1]])
    return m[is_record], d[is_record]


def estimate_constants(alpha, M):
    """Empirical (sigma, tau) for alpha from the divisors up to M.

    tau is minus the least squares slope of log d_m against log m over the record minima (the convergent
    denominators), leaving out records below M^(1/4) which are not yet asymptotic. sigma is then the largest value
    for which the scan up to M passes.
    """
    if M < 100:
        raise ContractError("constant estimation needs M >= 100, got {}".format(M))

    rational = nearest_rational(alpha, M)
    if rational is not None:
        raise DegenerateError(*rational)

    records, divisors = record_minima(alpha, M)
    tail = records >= M ** 0.25
    if np.count_nonzero(tail) < 3:
        tail = np.ones_like(records, dtype=bool)
    slope, _ = np.polyfit(np.log(records[tail]), np.log(divisors[tail]), 1)
    tau = max(float(-slope), 1e-6)

    m = np.arange(1, int(M) + 1)
    sigma = float(np.min(small_divisor(alpha, m) * m.astype(float) ** tau)) * (1.0 - 1e-12)

    logger.info("Estimated diophantine constants sigma = %.6g, tau = %.6g from %d records", sigma, tau, len(records))
    return sigma, tau
