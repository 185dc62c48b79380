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
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from ..errors import ContractError
from ..funcspace import holder_norm
from .operators import remainder, smooth

logger = logging.getLogger(__name__)


@dataclass
class SmoothingTable:
    """Measured ratios of the smoothing inequalities, one row per corpus member, N and bound."""

    s: int
    l: int
    rows: list = field(default_factory=list)

    def constants(self, bound):
        # Empirical constant for each N, the max over the corpus
        out = {}
        for row in self.rows:
            if row["bound"] == bound:
                out[row["N"]] = max(out.get(row["N"], 0.0), row["ratio"])
        return out

    def stability(self, bound):
        values = [v for v in self.constants(bound).values() if v > 0]
        return max(values) / min(values) if values else 1.0


def _ratio(numerator, denominator):
    return numerator / denominator if denominator > 0 else 0.0


def _measure(f_id, f, N, s, l, profile, norm_kwargs):
    scale = N ** (l - s)
    norm_s = holder_norm(f, s, **norm_kwargs)
    norm_l = holder_norm(f, l, **norm_kwargs)
    smooth_ratio = _ratio(holder_norm(smooth(f, N, profile), l, **norm_kwargs), scale * norm_s)
    rest_ratio = _ratio(scale * holder_norm(remainder(f, N, profile), s, **norm_kwargs), norm_l)
    return [
        {"f_id": f_id, "N": N, "s": s, "l": l, "bound": "smooth", "ratio": smooth_ratio},
        {"f_id": f_id, "N": N, "s": s, "l": l, "bound": "remainder", "ratio": rest_ratio},
    ]


def verify_smoothing_bounds(corpus, N_list, s, l, profile=None, threads=1, progress=False, **norm_kwargs):
    """Measure |S_N f|_l / (N^(l-s) |f|_s) and N^(l-s) |R_N f|_s / |f|_l over a corpus.

    corpus is a sequence of (f_id, CylinderFunction) pairs.
    """
    if not l >= s >= 0:
        raise ContractError("smoothing bounds need l >= s >= 0, got s = {}, l = {}".format(s, l))

    jobs = [(f_id, f, N) for f_id, f in corpus for N in N_list]
    table = SmoothingTable(s, l)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = pool.map(lambda job: _measure(*job, s, l, profile, norm_kwargs), jobs)
        for rows in tqdm(results, total=len(jobs), desc="Smoothing bounds", dynamic_ncols=True, disable=not progress):
            table.rows.extend(rows)

    for bound in ("smooth", "remainder"):
        logger.info("C_%d,%d (%s) by N: %s", s, l, bound, table.constants(bound))
    return table


def remainder_decay_slope(f, N_list, profile=None):
    """Least squares slope of -log2 |R_N f|_0 against log2 N."""
    norms = np.array([holder_norm(remainder(f, N, profile), 0) for N in N_list])
    if np.any(norms <= 0):
        return float("inf")
    slope, _ = np.polyfit(np.log2(N_list), np.log2(norms), 1)
    return float(-slope)


def interpolation_check(f, s, m, l, **norm_kwargs):
    """|f|_m / (|f|_s^(1 - lam) |f|_l^lam) with m = (1 - lam) s + lam l."""
    if not s <= m <= l:
        raise ContractError("interpolation needs s <= m <= l, got ({}, {}, {})".format(s, m, l))

    lam = (m - s) / (l - s) if l > s else 0.0
    denominator = holder_norm(f, s, **norm_kwargs) ** (1.0 - lam) * holder_norm(f, l, **norm_kwargs) ** lam
    return _ratio(holder_norm(f, m, **norm_kwargs), denominator)
