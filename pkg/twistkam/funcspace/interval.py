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

from ..errors import DomainError

# How far past an endpoint a point may sit before it counts as outside
ENDPOINT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Interval:
    """A closed interval [lo, hi] of the action variable."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (np.isfinite(self.lo) and np.isfinite(self.hi)) or not self.lo < self.hi:
            raise DomainError(self.lo, self, "invalid interval [{!r}, {!r}]".format(self.lo, self.hi))

    def __str__(self):
        return "[{:.6g}, {:.6g}]".format(self.lo, self.hi)

    @property
    def length(self):
        return self.hi - self.lo

    @property
    def halfwidth(self):
        return 0.5 * (self.hi - self.lo)

    @property
    def midpoint(self):
        return 0.5 * (self.hi + self.lo)

    def widen(self, delta):
        return Interval(self.lo - delta, self.hi + delta)

    def shrink(self, delta):
        if 2 * delta >= self.length:
            raise DomainError(delta, self, "cannot shrink {} by {:.6g}".format(self, delta))
        return Interval(self.lo + delta, self.hi - delta)

    def contains(self, other, tol=ENDPOINT_TOLERANCE):
        if isinstance(other, Interval):
            return other.lo >= self.lo - tol and other.hi <= self.hi + tol
        y = np.asarray(other)
        return bool(np.all((y >= self.lo - tol) & (y <= self.hi + tol)))

    def margin(self, inner):
        """Distance from the inner interval to the boundary of this one (negative when not contained)."""
        return min(inner.lo - self.lo, self.hi - inner.hi)

    def boundary_distance(self, y):
        """Signed distance of each y to the boundary, positive inside."""
        y = np.asarray(y, dtype=float)
        return np.minimum(y - self.lo, self.hi - y)

    def require(self, y, tol=ENDPOINT_TOLERANCE):
        """Raise a domain error carrying the worst offender if any y lies outside."""
        y = np.asarray(y, dtype=float)
        if y.size == 0:
            return
        d = self.boundary_distance(y)
        worst = int(np.argmin(d))
        if not np.isfinite(d.flat[worst]) or d.flat[worst] < -tol:
            raise DomainError(float(y.flat[worst]), self)

    def to_unit(self, y):
        """Map y in [lo, hi] onto t in [-1, 1]."""
        return (np.asarray(y, dtype=float) - self.midpoint) / self.halfwidth

    def from_unit(self, t):
        return self.midpoint + self.halfwidth * np.asarray(t, dtype=float)

    def intersect(self, other):
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))
