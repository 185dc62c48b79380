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
from functools import lru_cache

import numpy as np

from ..errors import ContractError
from .divisors import check_diophantine

# Terms summed explicitly in the solver constant before the integral tail bound
LEMMA_TAIL_TERMS = 10 ** 6


@lru_cache(maxsize=64)
def lemma_constant(sigma, tau, terms=LEMMA_TAIL_TERMS):
    """Upper bound of (1/sigma) sum_{m != 0} |m|^-(2 + floor(tau) - tau)."""
    s = 2.0 + np.floor(tau) - tau
    m = np.arange(terms, 0, -1, dtype=float)
    head = float(np.sum(m ** -s))
    tail = terms ** (1.0 - s) / (s - 1.0)
    return 2.0 * (head + tail) / sigma


def derived_params(sigma, tau):
    """(rho, mu, lemma_constant) for the diophantine constants."""
    if sigma <= 0 or tau <= 0:
        raise ContractError("sigma and tau must be positive, got {} and {}".format(sigma, tau))
    rho = int(np.floor(tau)) + 2
    return rho, 15 * (rho + 1), lemma_constant(float(sigma), float(tau))


@dataclass(frozen=True)
class DiophantineParams:
    alpha: float
    sigma: float
    tau: float
    check_bound: int = 10000

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise ContractError("alpha must lie in (0, 1), got {}".format(self.alpha))
        if self.sigma <= 0 or self.tau <= 0:
            raise ContractError("sigma and tau must be positive, got {} and {}".format(self.sigma, self.tau))

    @property
    def rho(self):
        return int(np.floor(self.tau)) + 2

    @property
    def mu(self):
        return 15 * (self.rho + 1)

    @property
    def lemma_constant(self):
        return lemma_constant(float(self.sigma), float(self.tau))

    def check(self, M=None):
        return check_diophantine(self.alpha, self.sigma, self.tau, self.check_bound if M is None else M)

    def to_json(self):
        return {
            "alpha": self.alpha,
            "sigma": self.sigma,
            "tau": self.tau,
            "rho": self.rho,
            "mu": self.mu,
            "lemma_constant": self.lemma_constant,
            "check_bound": self.check_bound,
        }
