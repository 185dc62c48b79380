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

# Perturbation expressions exercised by the round trip and evaluation tests
SAMPLE_EXPRESSIONS = (
    "0",
    "x + y",
    "0.1*sin(2*pi*3*x)/ (2*pi*3)^2",
    "sin(2*pi*x)*y",
    "-y^2 + 0.5*cos(2*pi*x)",
    "1e-3*(sin(2*pi*x) - cos(4*pi*x)*y)",
    "(1 + y/3)*cos(2*pi*(x + 0.25))",
    "-(x - 1)^3 / 7",
    "sin(cos(2*pi*x) + y) * .5",
    "2*y + 0.01*sin(2*pi*x)^2",
)
