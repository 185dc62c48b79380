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


@dataclass(frozen=True)
class Number:
    value: float


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    fn: str
    arg: object


def free_symbols(node):
    """Names of the coordinates an expression depends on."""
    if isinstance(node, Symbol):
        return {node.name}
    elif isinstance(node, Neg):
        return free_symbols(node.operand)
    elif isinstance(node, Binary):
        return free_symbols(node.left) | free_symbols(node.right)
    elif isinstance(node, Power):
        return free_symbols(node.base)
    elif isinstance(node, Call):
        return free_symbols(node.arg)
    return set()


def to_source(node):
    """Fully parenthesised source text that parses back to the same tree."""
    if isinstance(node, Number):
        return repr(float(node.value))
    elif isinstance(node, Symbol):
        return node.name
    elif isinstance(node, Pi):
        return "pi"
    elif isinstance(node, Neg):
        return "(-{})".format(to_source(node.operand))
    elif isinstance(node, Binary):
        return "({} {} {})".format(to_source(node.left), node.op, to_source(node.right))
    elif isinstance(node, Power):
        return "({}^{})".format(to_source(node.base), node.exponent)
    elif isinstance(node, Call):
        return "{}({})".format(node.fn, to_source(node.arg))
    else:
        raise RuntimeError("Unknown expression node '{}'".format(type(node).__name__))
