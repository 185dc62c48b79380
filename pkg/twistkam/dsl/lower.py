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

from ..errors import ConfigError, PeriodicityError
from ..funcspace import fit
from ..maps import FrequencyTwist
from .evaluate import evaluate
from .nodes import free_symbols
from .parser import parse

logger = logging.getLogger(__name__)

# Heights compared by the periodicity audit and the mismatch it accepts
AUDIT_SAMPLES = 32
AUDIT_TOLERANCE = 1e-9


def _tree(expr):
    return parse(expr) if isinstance(expr, str) else expr


def periodicity_mismatch(expr, interval, samples=AUDIT_SAMPLES):
    """Largest |e(0, y) - e(1, y)| over evenly spaced heights and where it occurs."""
    node = _tree(expr)
    y = np.linspace(interval.lo, interval.hi, samples)
    mismatch = np.abs(evaluate(node, np.zeros_like(y), y) - evaluate(node, np.ones_like(y), y))
    worst = int(np.argmax(mismatch))
    return float(mismatch[worst]), float(y[worst])


def lower_to_function(expr, grid, strict=True):
    """Fit an expression on the grid lattice.

    The lattice only sees x in [0, 1) so the fit is periodic regardless, the audit catches expressions whose
    periodic extension jumps at x = 1.
    """
    node = _tree(expr)
    mismatch, y = periodicity_mismatch(node, grid.interval)
    if mismatch > AUDIT_TOLERANCE:
        if strict:
            raise PeriodicityError(y, mismatch)
        logger.warning("Expression is not 1-periodic in x: mismatch %.3e at y = %.6g", mismatch, y)

    return fit(lambda x, y: evaluate(node, x, y), grid)


def frequency_map(src):
    """A vectorised callable of y from an expression that must not mention x."""
    node = _tree(src)
    if "x" in free_symbols(node):
        raise ConfigError("frequency map '{}' depends on x".format(src))
    return lambda y: evaluate(node, 0.0, y)


def build_frequency_twist(blob):
    """FrequencyTwist from its serialized form {omega, omega_inv?, bracket?}."""
    bracket = tuple(blob.get("bracket") or (-10.0, 10.0))
    omega_inv = frequency_map(blob["omega_inv"]) if blob.get("omega_inv") else None
    source = {"omega": blob["omega"], "omega_inv": blob.get("omega_inv"), "bracket": list(bracket)}
    return FrequencyTwist(frequency_map(blob["omega"]), omega_inv, bracket, source)
