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

class EngineError(RuntimeError):
    """Base of every error raised by the engine, carries the exit code the command line maps it to."""

    exit_code = 3


class ConfigError(EngineError):
    exit_code = 4
    prefix = "Invalid configuration"

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super(ConfigError, self).__init__("{}: {}".format(self.prefix, "; ".join(self.violations)))


class ParseError(ConfigError):
    prefix = "Could not parse expression"

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = sorted(set(expected))
        detail = "{} at offset {}".format(message, offset)
        if self.expected:
            detail = "{} (expected one of {})".format(detail, ", ".join(self.expected))
        super(ParseError, self).__init__(detail)


class PeriodicityError(ConfigError):
    def __init__(self, y, mismatch):
        self.y = y
        self.mismatch = mismatch
        super(PeriodicityError, self).__init__(
            "expression is not 1-periodic in x: |e(0,y) - e(1,y)| = {:.3e} at y = {:.6g}".format(mismatch, y)
        )


class HypothesisError(EngineError):
    exit_code = 2
    output_dir = None

    def __init__(self, which, detail=""):
        self.which = which
        super(HypothesisError, self).__init__("{} hypothesis violated{}".format(which, ": " + detail if detail else ""))


class DiophantineError(HypothesisError):
    def __init__(self, m, detail=""):
        self.m = m
        super(DiophantineError, self).__init__("diophantine", detail or "first violation at m = {}".format(m))


class DegenerateError(DiophantineError):
    def __init__(self, p, q):
        self.p = p
        self.q = q
        super(DegenerateError, self).__init__(q, "alpha is within 1e-12 of the rational {}/{}".format(p, q))


class NumericalError(EngineError):
    exit_code = 3


class ResonanceError(NumericalError):
    def __init__(self, m, divisor):
        self.m = m
        self.divisor = divisor
        super(ResonanceError, self).__init__("resonant mode m = {} (small divisor {:.3e})".format(m, divisor))


class SamplingError(NumericalError):
    def __init__(self, x, y, value):
        self.node = (x, y)
        super(SamplingError, self).__init__("non-finite sample {} at node ({:.6g}, {:.6g})".format(value, x, y))


class ConvergenceError(NumericalError):
    def __init__(self, iterations, step):
        self.iterations = iterations
        self.step = step
        super(ConvergenceError, self).__init__(
            "fixed point iteration did not converge after {} iterations (last step {:.3e})".format(iterations, step)
        )


class DomainError(NumericalError):
    def __init__(self, value, interval, message=None):
        self.value = value
        self.interval = interval
        super(DomainError, self).__init__(message or "y = {!r} lies outside {}".format(value, interval))


class RangeError(DomainError):
    def __init__(self, sample, interval, what="image"):
        self.sample = sample
        super(RangeError, self).__init__(
            sample[1], interval, "{} escapes {}: worst sample ({:.6g}, {:.6g})".format(what, interval, *sample)
        )


class ContractError(NumericalError):
    pass


class GridMismatchError(ContractError):
    def __init__(self, a, b):
        self.grids = (a, b)
        super(GridMismatchError, self).__init__("grid mismatch: {} vs {}".format(a, b))


class DomainExhausted(ContractError):
    def __init__(self, delta):
        self.delta = delta
        super(DomainExhausted, self).__init__("domain exhausted: new width {:.6g} is not positive".format(delta))
