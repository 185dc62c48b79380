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

from ..config import build_pair
from ..kam import CONVERGED, HYPOTHESIS_VIOLATED, STEP_COLUMNS, final_semiconjugacy, run
from ..maps import conjugacy_residuals, invert_near_identity
from ..report import write_report, write_table

logger = logging.getLogger(__name__)


def kam(config, output_path, progress=False):
    pair = build_pair(config)
    kam_config = config.kam_config(progress)
    result = run(pair.F, pair.K, pair.W, kam_config)

    # Save the step ledger
    write_table(os.path.join(output_path, "steps.csv"), STEP_COLUMNS, [r.row() for r in result.steps])

    body = {"diophantine": config.dio.to_json(), "kam": result.to_json()}
    if result.status == CONVERGED and len(result.final_state.h_stack) > 0:
        H = result.H_total
        W = final_semiconjugacy(result, pair.W, config.grid)
        body["semiconjugacy"] = {"slope": W.slope(), "lipschitz": W.lipschitz}

        inner = H.domain.shrink(H.sup_norm() + H.c1_norm)
        body["inverse"] = conjugacy_residuals(H, invert_near_identity(H, config.grid, inner), config.grid)

    write_report(output_path, config, body)

    if result.status == CONVERGED:
        return 0
    elif result.status == HYPOTHESIS_VIOLATED:
        logger.error("Run refused, hypothesis '%s' fails", result.detail)
        return 2
    else:
        logger.error("Run ended with %s: %s", result.status, result.detail)
        return 3
