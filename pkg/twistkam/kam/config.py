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

from dataclasses import dataclass, field

from ..diophantine import DiophantineParams
from ..errors import ConfigError
from ..funcspace import GridSpec, Interval
from ..smoothing import DEFAULT_PROFILE, CutoffProfile


@dataclass(frozen=True)
class KamConfig:
    """Everything the iteration needs besides the pair itself.

    The perturbations live on interval widened by delta0, the conjugacy is certified on interval widened by delta0/2.
    """

    dio: DiophantineParams
    interval: Interval
    delta0: float
    grid: GridSpec
    tol_e0: float = 1e-9
    max_iter: int = 12
    lipschitz0: float = 2.0
    profile: CutoffProfile = field(default=DEFAULT_PROFILE)
    commute_tol: float = 1e-8
    semiconjugacy_tol: float = 1e-8
    progress: bool = False

    def __post_init__(self):
        violations = []
        if not 0 < self.delta0 <= 0.5:
            violations.append("delta0 must lie in (0, 1/2], got {}".format(self.delta0))
        if not self.tol_e0 > 0:
            violations.append("tol must be positive, got {}".format(self.tol_e0))
        if not self.lipschitz0 > 1:
            violations.append("lipschitz0 must exceed 1, got {}".format(self.lipschitz0))
        if self.max_iter < 0:
            violations.append("max_iter must be non-negative, got {}".format(self.max_iter))
        if violations:
            raise ConfigError(violations)

    def domain(self, delta):
        """T x I_delta, the base interval widened by delta."""
        return self.interval.widen(delta)
