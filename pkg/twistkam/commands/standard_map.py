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
import os

from ..diagnostics import commutator_residual, intersection_check, phase_portrait, seed_grid
from ..diophantine import check_diophantine, rational_approximant
from ..maps import rational_pair, standard_family
from ..report import write_report, write_table

logger = logging.getLogger(__name__)


def standard_map(config, output_path, progress=False):
    section = config.section
    grid = config.grid
    S = standard_family(section["epsilon"], section["q"], section["r"], grid)

    # Orbits of the family, wrapped in the action variable
    seeds = seed_grid(section["seeds"], config.interval, section["x0"])
    table = phase_portrait(S, seeds, section["iterations"], wrap_y=section["wrap"], progress=progress)
    path = os.path.join(output_path, "portrait.csv")
    write_table(path, ["seed_id", "n", "x", "y"], table.rows, ["%d", "%d", "%.17g", "%.17g"])

    intersection = intersection_check(S)
    body = {
        "epsilon": section["epsilon"],
        "q": section["q"],
        "r": section["r"],
        "rows": len(table),
        "escaped": {str(k): v for k, v in table.escaped.items()},
        "intersection": intersection.to_json(),
    }

    # A pair close to (U0, T_alpha) that commutes but is not linearizable
    if "closeness" in section and config.alpha is not None:
        c = rational_approximant(config.alpha, section["closeness"])
        F, K = rational_pair(c.numerator, c.denominator, section["epsilon"], section["r"], grid)
        check = check_diophantine(K.base.alpha, 1e-12, 1.0, 10 * c.denominator)
        body["counterexample"] = {
            "p": c.numerator,
            "q": c.denominator,
            "distance": abs(config.alpha - float(c)),
            "commutator": commutator_residual(F, K, grid).direct,
            "diophantine_first_violation": check.first_violation,
        }

    logger.info("Wrote %d orbit points, %d orbits escaped", len(table), len(table.escaped))
    write_report(output_path, config, body)
    return 0
