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

import os

import numpy as np

from ..diophantine import convergents, derived_params, estimate_constants, record_minima
from ..report import write_report, write_table


def constants(config, output_path, progress=False):
    section = config.section
    alpha = config.alpha
    M = section["M"]

    sigma, tau = estimate_constants(alpha, M)
    rho, mu, C = derived_params(sigma, tau)

    # Record minima of the small divisors, scaled by m^tau
    m, d = record_minima(alpha, M)
    write_table(
        os.path.join(output_path, "constants.csv"),
        ["m", "divisor", "scaled"],
        np.column_stack([m, d, d * m.astype(float) ** tau]),
        ["%d", "%.17g", "%.17g"],
    )

    write_report(
        output_path,
        config,
        {
            "alpha": alpha,
            "M": M,
            "sigma": sigma,
            "tau": tau,
            "rho": rho,
            "mu": mu,
            "lemma_constant": C,
            "convergents": [[c.numerator, c.denominator] for c in convergents(alpha, section["convergents"])],
            "records": len(m),
        },
    )
    return 0
