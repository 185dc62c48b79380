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
from ..funcspace import Interval, VectorFunction
from .base import FrequencyTwist, Translation, Twist
from .cylinder_map import CylinderMap


def _frequency_image(twist, interval):
    twist.verify(interval)
    ends = twist.omega(np.array([interval.lo, interval.hi]))
    return Interval(float(np.min(ends)), float(np.max(ends)))


def reduce_by_frequency(F, K, grid):
    """Pass to the coordinates Q(x, y) = (x, omega^-1(y)) in which the frequency twist becomes U0.

    The new perturbations are f1 o Q and omega(omega^-1(y) + f2 o Q) - y, likewise for K. The action interval is
    carried through omega.
    """
    if not isinstance(F.base, FrequencyTwist):
        raise ContractError("frequency reduction needs F over a frequency twist, got {!r}".format(F.base))
    if not isinstance(K.base, Translation):
        raise ContractError("frequency reduction needs K over a translation, got {!r}".format(K.base))

    twist = F.base
    source = F.domain.intersect(K.domain)
    lattice = grid.on(_frequency_image(twist, source))
    X, Y = lattice.lattice()
    Yq = np.clip(twist.omega_inv(Y), source.lo, source.hi)

    def transport(pert):
        p1, p2 = pert(X, Yq)
        return VectorFunction.fit_values(p1, twist.omega(Yq + p2) - Y, lattice)

    return CylinderMap(Twist(), transport(F.pert)), CylinderMap(K.base, transport(K.pert))


def lift_by_frequency(F, K, twist, grid):
    """Inverse of reduce_by_frequency, a pair over (U0, T_alpha) moved back over the frequency twist."""
    if not isinstance(F.base, Twist) or not isinstance(K.base, Translation):
        raise ContractError("frequency lift needs a pair over the twist and a translation")

    source = F.domain.intersect(K.domain)
    ends = twist.omega_inv(np.array([source.lo, source.hi]))
    target = Interval(float(np.min(ends)), float(np.max(ends)))
    twist.verify(target)

    lattice = grid.on(target)
    X, Y = lattice.lattice()
    W = np.clip(twist.omega(Y), source.lo, source.hi)

    def transport(pert):
        p1, p2 = pert(X, W)
        return VectorFunction.fit_values(p1, twist.omega_inv(W + p2) - Y, lattice)

    return CylinderMap(twist, transport(F.pert)), CylinderMap(K.base, transport(K.pert))
