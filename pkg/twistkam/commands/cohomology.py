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

import numpy as np

from ..cohomology import solve_delta_alpha
from ..corpus import geometric_modes, mode_ladder, trig_chebyshev_corpus
from ..report import write_csv, write_report
from ..smoothing import interpolation_check, remainder_decay_slope, verify_smoothing_bounds

logger = logging.getLogger(__name__)


def cohomology(config, output_path, progress=False):
    section = config.section
    dio = config.dio
    grid = config.grid
    norm_kwargs = {"n_pairs": config.pairs, "seed": config.seed}

    corpus = trig_chebyshev_corpus(
        grid,
        size=section["corpus_size"],
        seed=config.seed,
        max_mode=section["max_mode"],
        max_degree=section["max_degree"],
    )

    # Solve the cohomological equation for every corpus member
    rows = []
    for f_id, phi in corpus:
        solution = solve_delta_alpha(phi, dio, r=section["order"])
        mean = float(np.max(np.abs(solution.u.coeffs[0])))
        rows.append([f_id, solution.residual_c0, mean, solution.bound_ratio, dio.lemma_constant])
    write_csv(
        os.path.join(output_path, "cohomology.csv"), ["f_id", "residual", "mean", "bound_ratio", "constant"], rows
    )

    # Smoothing inequalities, their constants and the remainder decay
    bounds = section["bounds"]
    smoothing_rows = []
    smoothing = {}
    for l in bounds["l"]:
        table = verify_smoothing_bounds(
            corpus, bounds["N"], bounds["s"], l, config.profile, config.threads, progress, **norm_kwargs
        )
        smoothing_rows.extend([r["f_id"], r["N"], r["s"], r["l"], r["bound"], r["ratio"]] for r in table.rows)
        ladder = verify_smoothing_bounds(mode_ladder(grid), bounds["N"], bounds["s"], l, config.profile, **norm_kwargs)
        smoothing[str(l)] = {
            "constants": {b: table.constants(b) for b in ("smooth", "remainder")},
            "ladder_stability": {b: ladder.stability(b) for b in ("smooth", "remainder")},
        }
    write_csv(os.path.join(output_path, "smoothing.csv"), ["f_id", "N", "s", "l", "bound", "ratio"], smoothing_rows)

    decay = remainder_decay_slope(geometric_modes(grid), bounds["N"], config.profile)

    worst = max(r[1] for r in rows)
    logger.info("Solved %d right hand sides, worst residual %.3e", len(rows), worst)
    write_report(
        output_path,
        config,
        {
            "diophantine": dio.to_json(),
            "solutions": len(rows),
            "worst_residual": worst,
            "worst_bound_ratio": max(r[3] for r in rows),
            "smoothing": smoothing,
            "remainder_decay_slope": decay,
            "interpolation_ratio": interpolation_check(mode_ladder(grid, [1])[0][1], 0, 1, 2, **norm_kwargs),
        },
    )
    return 0
