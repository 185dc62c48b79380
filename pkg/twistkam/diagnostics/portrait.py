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

from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm


@dataclass
class PortraitTable:
    """Orbit points as rows (seed_id, n, x mod 1, y), ordered by seed then iterate."""

    rows: np.ndarray
    escaped: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.rows)


def phase_portrait(F, seeds, n_iter, wrap_y=None, progress=False):
    """Iterate every seed n_iter times under F.

    An orbit that leaves the domain of F is truncated there and its seed is recorded in escaped with the iterate at
    which it left. With wrap_y set the action is reduced modulo wrap_y into the domain, for maps that are periodic
    in y such as the standard family.
    """
    seeds = np.asarray(seeds, dtype=float).reshape(-1, 2)
    n_seeds = len(seeds)
    lo, hi = F.domain.lo, F.domain.hi

    x = np.mod(seeds[:, 0], 1.0)
    y = seeds[:, 1].copy()
    alive = np.ones(n_seeds, dtype=bool)
    escaped = {}

    xs = np.full((n_iter, n_seeds), np.nan)
    ys = np.full((n_iter, n_seeds), np.nan)

    for n in tqdm(range(n_iter), desc="Orbits", dynamic_ncols=True, disable=not progress):
        idx = np.flatnonzero(alive)
        if len(idx) == 0:
            break

        nx, ny = F(x[idx], y[idx])
        nx = np.mod(nx, 1.0)
        if wrap_y is not None:
            ny = lo + np.mod(ny - lo, wrap_y)

        # Orbits leaving the domain stop here
        outside = (ny < lo) | (ny > hi)
        for i in idx[outside]:
            escaped[int(i)] = n + 1
        alive[idx[outside]] = False

        inside = idx[~outside]
        x[inside] = nx[~outside]
        y[inside] = ny[~outside]
        xs[n, inside] = x[inside]
        ys[n, inside] = y[inside]

    rows = []
    for s in range(n_seeds):
        valid = np.flatnonzero(~np.isnan(xs[:, s]))
        rows.append(np.column_stack([np.full(len(valid), s), valid + 1, xs[valid, s], ys[valid, s]]))

    return PortraitTable(np.concatenate(rows) if rows else np.zeros((0, 4)), escaped)


def seed_grid(n_seeds, interval, x0=0.0):
    """Seeds spread evenly over the action interval at a common angle."""
    y = np.linspace(interval.lo, interval.hi, n_seeds + 2)[1:-1]
    return np.column_stack([np.full(n_seeds, x0), y])
