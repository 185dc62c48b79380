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

"""Shared fixtures, a resolved golden rotation, the standard grid and a manufactured commuting pair."""

import os

import pytest

from twistkam.corpus import trig_chebyshev_corpus
from twistkam.diophantine import GOLDEN, DiophantineParams, estimate_constants
from twistkam.funcspace import GridSpec, Interval
from twistkam.kam import KamConfig
from twistkam.maps import fixture_generator, manufacture_commuting_pair

CONFIG_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "configs")


@pytest.fixture(scope="session")
def golden():
    sigma, tau = estimate_constants(GOLDEN, 10000)
    return DiophantineParams(GOLDEN, sigma, tau)


@pytest.fixture(scope="session")
def grid():
    return GridSpec(64, 32, Interval(-0.5, 0.5))


@pytest.fixture(scope="session")
def corpus(grid):
    return trig_chebyshev_corpus(grid)


@pytest.fixture(scope="session")
def kam_config(golden):
    interval = Interval(-0.25, 0.25)
    return KamConfig(golden, interval, 0.25, GridSpec(64, 32, interval), max_iter=8)


@pytest.fixture(scope="session")
def manufactured(kam_config):
    """(F, K, H_true, W_true) on T x [-1/2, 1/2] for a generator of C1 norm 1e-3."""
    domain = kam_config.domain(kam_config.delta0)
    h_gen = fixture_generator(kam_config.grid.on(domain.widen(0.05)), 1e-3)
    return manufacture_commuting_pair(h_gen, GOLDEN, kam_config.grid, domain)


@pytest.fixture
def config_path():
    return lambda name: os.path.join(CONFIG_DIR, name)
