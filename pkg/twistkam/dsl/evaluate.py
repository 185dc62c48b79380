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

from .nodes import Binary, Call, Neg, Number, Pi, Power, Symbol

_BINARY = {"+": np.add, "-": np.subtract, "*": np.multiply, "/": np.divide}
_CALLS = {"sin": np.sin, "cos": np.cos}


def _walk(node, x, y):
    if isinstance(node, Number):
        return node.value
    elif isinstance(node, Symbol):
        return x if node.name == "x" else y
    elif isinstance(node, Pi):
        return np.pi
    elif isinstance(node, Neg):
        return -_walk(node.operand, x, y)
    elif isinstance(node, Binary):
        return _BINARY[node.op](_walk(node.left, x, y), _walk(node.right, x, y))
    elif isinstance(node, Power):
        return np.power(_walk(node.base, x, y), node.exponent)
    elif isinstance(node, Call):
        return _CALLS[node.fn](_walk(node.arg, x, y))
    else:
        raise RuntimeError("Unknown expression node '{}'".format(type(node).__name__))


def evaluate(node, x, y):
    """Evaluate the tree at broadcast arrays x and y, a float for scalar inputs."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    value = np.broadcast_to(np.asarray(_walk(node, x, y), dtype=float), np.broadcast(x, y).shape)
    return float(value) if value.ndim == 0 else np.array(value)
