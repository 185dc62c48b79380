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

# Bisection steps for numerically inverted frequency maps
BISECTION_STEPS = 200


class Identity:
    tag = "identity"

    def __call__(self, x, y):
        return np.asarray(x, dtype=float), np.asarray(y, dtype=float)

    def inverse(self, x, y):
        return self(x, y)

    def __eq__(self, other):
        return isinstance(other, Identity)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "Identity()"

    def to_json(self):
        return {"tag": self.tag}


@dataclass(frozen=True)
class Translation:
    alpha: float
    tag = "translation"

    def __call__(self, x, y):
        return np.asarray(x, dtype=float) + self.alpha, np.asarray(y, dtype=float)

    def inverse(self, x, y):
        return np.asarray(x, dtype=float) - self.alpha, np.asarray(y, dtype=float)

    def to_json(self):
        return {"tag": self.tag, "alpha": self.alpha}


class Twist:
    """U0(x, y) = (x + y, y)."""

    tag = "twist"

    def __call__(self, x, y):
        y = np.asarray(y, dtype=float)
        return np.asarray(x, dtype=float) + y, y

    def inverse(self, x, y):
        y = np.asarray(y, dtype=float)
        return np.asarray(x, dtype=float) - y, y

    def __eq__(self, other):
        return isinstance(other, Twist)

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return "Twist()"

    def to_json(self):
        return {"tag": self.tag}


def monotone_inverse(omega, bracket, steps=BISECTION_STEPS):
    """Vectorised bisection inverse of a strictly monotone omega on the bracket (lo, hi)."""
    lo, hi = bracket
    increasing = omega(np.array(hi)) > omega(np.array(lo))

    def inverse(y):
        y = np.asarray(y, dtype=float)
        a = np.full(y.shape, lo, dtype=float)
        b = np.full(y.shape, hi, dtype=float)
        for _ in range(steps):
            c = 0.5 * (a + b)
            below = (omega(c) < y) == increasing
            a = np.where(below, c, a)
            b = np.where(below, b, c)
            if np.all(b - a <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(c))):
                break
        return 0.5 * (a + b)

    return inverse


class FrequencyTwist:
    """F0(x, y) = (x + omega(y), y) for a strictly monotone frequency map omega.

    omega (and optionally its inverse) are vectorised callables. The expression sources are kept for serialization
    when the map was built from expressions.
    """

    tag = "frequency_twist"

    def __init__(self, omega, omega_inv=None, bracket=(-10.0, 10.0), source=None):
        self.omega = omega
        self.omega_inv = omega_inv if omega_inv is not None else monotone_inverse(omega, bracket)
        self.bracket = bracket
        self.source = source

    def __call__(self, x, y):
        y = np.asarray(y, dtype=float)
        return np.asarray(x, dtype=float) + self.omega(y), y

    def inverse(self, x, y):
        y = np.asarray(y, dtype=float)
        return np.asarray(x, dtype=float) - self.omega(y), y

    def __repr__(self):
        return "FrequencyTwist({})".format(self.source["omega"] if self.source else self.omega)

    def verify(self, interval, samples=257, tol=1e-10):
        """Check strict monotonicity and the omega round trip on the interval."""
        y = np.linspace(interval.lo, interval.hi, samples)
        w = self.omega(y)
        steps = np.diff(w)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise ContractError("frequency map is not strictly monotone on {}".format(interval))
        error = float(np.max(np.abs(self.omega_inv(w) - y)))
        if error > tol:
            raise ContractError("frequency map inverse round trip error {:.3e} on {}".format(error, interval))
        return error

    def to_json(self):
        if self.source is None:
            raise ContractError("frequency twist built from callables cannot be serialized")
        return {"tag": self.tag, **self.source}


def compose_bases(outer, inner):
    """The base of outer o inner when it has a closed form among the base kinds, otherwise None."""
    if isinstance(inner, Identity):
        return outer
    if isinstance(outer, Identity):
        return inner
    if isinstance(outer, Translation) and isinstance(inner, Translation):
        return Translation(outer.alpha + inner.alpha)
    return None


def base_from_json(blob, build_frequency=None):
    tag = blob["tag"]
    if tag == "identity":
        return Identity()
    elif tag == "translation":
        return Translation(float(blob["alpha"]))
    elif tag == "twist":
        return Twist()
    elif tag == "frequency_twist":
        if build_frequency is None:
            raise ContractError("frequency twist needs an expression builder to deserialize")
        return build_frequency(blob)
    else:
        raise ContractError("Unknown map base '{}'".format(tag))
