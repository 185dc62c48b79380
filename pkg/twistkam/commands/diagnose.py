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

from ..config import build_pair
from ..diagnostics import (
    commutator_residual,
    commutator_scaling,
    intersection_check,
    k2_average_probe,
    semiconjugacy_residual,
)
from ..kam import preflight
from ..maps import fixture_generator
from ..report import write_report

logger = logging.getLogger(__name__)


def diagnose(config, output_path, progress=False):
    section = config.section
    grid = config.grid
    pair = build_pair(config)
    F, K, W = pair.F, pair.K, pair.W

    commutator = commutator_residual(F, K, grid)
    k2 = k2_average_probe(F, K, grid)
    intersection = intersection_check(F, y_samples=section["y_samples"])
    semi = semiconjugacy_residual(W, K, config.alpha, grid)
    checks, failed = preflight(F, K, W, config.kam_config())

    body = {
        "commutator": {
            "direct": commutator.direct,
            "operator": commutator.operator,
            "composition": commutator.composition,
        },
        "k2_average": {"average": k2.average, "bound": k2.bound, "ratio": k2.ratio},
        "intersection": intersection.to_json(),
        "semiconjugacy": {"residual": semi.residual, "slope": semi.slope, "lipschitz": semi.lipschitz},
        "preflight": checks,
        "first_failed": failed,
        "note": "intersection is checked on sampled horizontal circles only",
    }

    # Quadratic smallness of the commutator over scaled copies of the fixture generator
    spec = section["pair"]
    if spec["kind"] == "manufactured":
        h_unit = fixture_generator(grid.on(config.domain.widen(spec["margin"])), 1.0)
        body["scaling"] = commutator_scaling(h_unit, config.alpha, section["scaling"], grid, config.domain)

    if failed is not None:
        logger.warning("Hypothesis '%s' fails for this pair", failed)
    write_report(output_path, config, body)
    return 0
