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

from dataclasses import dataclass

import numpy as np

from ..diagnostics import SemiConjugacy
from ..dsl import build_frequency_twist, lower_to_function
from ..errors import ConfigError
from ..funcspace import Interval, VectorFunction
from ..maps import (
    CylinderMap,
    Translation,
    Twist,
    fixture_generator,
    manufacture_commuting_pair,
    rational_pair,
    reduce_by_frequency,
)


@dataclass(frozen=True)
class BuiltPair:
    """The commuting pair a run works on, over (U0, T_alpha), with its semi-conjugacy and any ground truth."""

    F: CylinderMap
    K: CylinderMap
    W: SemiConjugacy
    H_true: object = None
    frequency: object = None


def _expressions(spec, alpha, grid, domain):
    pert = spec["pert"]
    strict = spec["strict"]

    def lower(names, lattice):
        return VectorFunction(*(lower_to_function(pert[n], lattice, strict) for n in names))

    if "frequency" not in spec:
        lattice = grid.on(domain)
        F = CylinderMap(Twist(), lower(("f1", "f2"), lattice))
        K = CylinderMap(Translation(alpha), lower(("k1", "k2"), lattice))
        return F, K, None

    # Lower on the preimage of the domain so the reduced pair lives on the domain itself
    twist = build_frequency_twist(spec["frequency"])
    ends = twist.omega_inv(np.array([domain.lo, domain.hi]))
    lattice = grid.on(Interval(float(np.min(ends)), float(np.max(ends))))
    F = CylinderMap(twist, lower(("f1", "f2"), lattice))
    K = CylinderMap(Translation(alpha), lower(("k1", "k2"), lattice))
    F, K = reduce_by_frequency(F, K, grid)
    return F, K, twist


def build_pair(config):
    """The pair and semi-conjugacy described by the pair and semiconjugacy entries of the subcommand section."""
    section = config.section
    spec = section["pair"]
    kind = spec["kind"]
    domain = config.domain
    lattice = config.grid.on(domain)
    alpha = config.alpha
    H_true = None
    frequency = None
    W = None

    if kind == "manufactured":
        h_gen = fixture_generator(config.grid.on(domain.widen(spec["margin"])), spec["c1_norm"])
        F, K, H_true, W = manufacture_commuting_pair(h_gen, alpha, config.grid, domain)

    elif kind == "expressions":
        F, K, frequency = _expressions(spec, alpha, config.grid, domain)

    elif kind == "rational":
        if abs(spec["p"] / spec["q"] - alpha) > 1e-15:
            raise ConfigError("pair rotation {}/{} does not match alpha = {}".format(spec["p"], spec["q"], alpha))
        F, K = rational_pair(spec["p"], spec["q"], spec["epsilon"], spec["r"], lattice)

    elif kind == "identity":
        F, K = CylinderMap.twist(lattice), CylinderMap.translation(alpha, lattice)

    else:
        raise ConfigError("Unknown pair kind '{}'".format(kind))

    return BuiltPair(F, K, build_semiconjugacy(section["semiconjugacy"], lattice, W), H_true, frequency)


def build_semiconjugacy(spec, lattice, manufactured=None):
    kind = spec["kind"]
    if kind == "projection":
        return SemiConjugacy.projection(lattice, spec["lipschitz"])
    elif kind == "manufactured":
        return manufactured
    elif kind == "expression":
        v = lower_to_function(spec["v"], lattice)
        return SemiConjugacy(v, spec["lipschitz"]) if "lipschitz" in spec else SemiConjugacy.from_v(v)
    else:
        raise ConfigError("Unknown semi-conjugacy kind '{}'".format(kind))
