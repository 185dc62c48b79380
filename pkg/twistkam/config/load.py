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

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import yaml

from ..diophantine import GOLDEN, DiophantineParams, estimate_constants
from ..errors import ConfigError, ContractError, DomainError, HypothesisError
from ..funcspace import GridSpec, Interval
from ..kam import KamConfig
from ..smoothing import CutoffProfile
from .merge_configuration import merge_configuration
from .schema import (
    COMMON_DEFAULTS,
    NEEDS_ALPHA,
    NEEDS_PAIR,
    PAIR_DEFAULTS,
    SCHEMA,
    SECTION_DEFAULTS,
    SEMICONJUGACY_DEFAULTS,
    SUBCOMMANDS,
    auto_bound,
    validate,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    """A validated configuration with defaults filled and symbolic values resolved.

    document keeps the merged configuration before resolution, which loads back to the same RunConfig.
    """

    subcommand: str
    document: dict
    alpha: float
    dio: DiophantineParams
    interval: Interval
    delta0: float
    grid: GridSpec
    tol: float
    max_iter: int
    lipschitz0: float
    output_dir: str
    seed: int
    threads: int
    profile: CutoffProfile
    pairs: int
    section: dict = field(default_factory=dict)

    @property
    def domain(self):
        """The interval widened by delta0, where the perturbations live."""
        return self.interval.widen(self.delta0)

    def kam_config(self, progress=False):
        return KamConfig(
            dio=self.dio,
            interval=self.interval,
            delta0=self.delta0,
            grid=self.grid,
            tol_e0=self.tol,
            max_iter=self.max_iter,
            lipschitz0=self.lipschitz0,
            profile=self.profile,
            commute_tol=self.section.get("commute_tol", 1e-8),
            semiconjugacy_tol=self.section.get("semiconjugacy_tol", 1e-8),
            progress=progress,
        )


def resolve_alpha(value):
    if value == "golden":
        return GOLDEN
    if isinstance(value, str):
        return float(Fraction(value.replace(" ", "")))
    return float(value)


def _required(document, subcommand):
    missing = []
    if subcommand in NEEDS_ALPHA and "alpha" not in document:
        missing.append("missing required key 'alpha'")
    if subcommand in NEEDS_PAIR:
        section = document.get(subcommand, {})
        for key in ("pair", "semiconjugacy"):
            if not isinstance(section, dict) or key not in section:
                missing.append("missing required key '{}.{}'".format(subcommand, key))
    return missing


def _fill_defaults(document, subcommand):
    merged = merge_configuration(COMMON_DEFAULTS, document)
    section = merge_configuration(SECTION_DEFAULTS[subcommand], merged.get(subcommand, {}))

    if "pair" in section:
        section["pair"] = merge_configuration(PAIR_DEFAULTS[section["pair"]["kind"]], section["pair"])
    if "semiconjugacy" in section:
        semi = section["semiconjugacy"]
        section["semiconjugacy"] = merge_configuration(SEMICONJUGACY_DEFAULTS[semi["kind"]], semi)

    merged[subcommand] = section
    return merged


def _consistency(merged, subcommand):
    violations = []
    interval = merged["interval"]
    if not interval["lo"] < interval["hi"]:
        violations.append("interval.lo must be below interval.hi, got {lo} and {hi}".format(**interval))
    if not merged["delta0"] <= 0.5:
        violations.append("delta0 must lie in (0, 1/2], got {}".format(merged["delta0"]))
    nx = merged["grid"]["nx"]
    if nx & (nx - 1) != 0:
        violations.append("grid.nx must be a power of two, got {}".format(nx))
    if not merged["lipschitz0"] > 1:
        violations.append("lipschitz0 must exceed 1, got {}".format(merged["lipschitz0"]))

    section = merged[subcommand]
    if "semiconjugacy" in section and section["semiconjugacy"]["kind"] == "manufactured":
        if section["pair"]["kind"] != "manufactured":
            violations.append("{}.semiconjugacy.kind 'manufactured' needs a manufactured pair".format(subcommand))
    if "pair" in section and section["pair"]["kind"] == "expressions" and "frequency" in section["pair"]:
        if "omega" not in section["pair"]["frequency"]:
            violations.append("missing required key '{}.pair.frequency.omega'".format(subcommand))
    if subcommand == "counterexample-2d" and not section["delta"] < 0.15915494309189535:
        violations.append("counterexample-2d.delta must be below 1/(2 pi), got {}".format(section["delta"]))
    if subcommand == "standard-map" and section["wrap"] > interval["hi"] - interval["lo"]:
        violations.append(
            "standard-map.wrap must not exceed the interval length {}, got {}".format(
                interval["hi"] - interval["lo"], section["wrap"]
            )
        )
    return violations


def _diophantine(merged, alpha):
    sigma, tau = merged["sigma"], merged["tau"]
    bound = auto_bound(sigma) or auto_bound(tau)
    if bound is not None:
        estimated = estimate_constants(alpha, bound)
        sigma = estimated[0] if auto_bound(sigma) else sigma
        tau = estimated[1] if auto_bound(tau) else tau
    return DiophantineParams(alpha, float(sigma), float(tau), merged["check_bound"])


def resolve(document, subcommand):
    """Validate a configuration document for a subcommand and resolve it into a RunConfig."""
    if subcommand not in SUBCOMMANDS:
        raise ConfigError("Unknown subcommand '{}'".format(subcommand))
    if not isinstance(document, dict):
        raise ConfigError("configuration must be a mapping, got {}".format(type(document).__name__))

    violations = validate(document, SCHEMA) + _required(document, subcommand)
    if violations:
        raise ConfigError(violations)

    merged = _fill_defaults(document, subcommand)
    violations = _consistency(merged, subcommand)
    if violations:
        raise ConfigError(violations)

    try:
        alpha = resolve_alpha(merged["alpha"]) if "alpha" in merged else None
        if alpha is not None and not 0 < alpha < 1:
            raise ConfigError("alpha must lie in (0, 1), got {}".format(merged["alpha"]))
        dio = _diophantine(merged, alpha) if alpha is not None and subcommand in NEEDS_ALPHA else None
    except HypothesisError as e:
        # No RunConfig exists yet, the error carries the output directory instead
        e.output_dir = merged["output_dir"]
        raise
    except (ContractError, DomainError, ValueError, ZeroDivisionError) as e:
        raise ConfigError(str(e))

    try:
        interval = Interval(float(merged["interval"]["lo"]), float(merged["interval"]["hi"]))
        grid = GridSpec(merged["grid"]["nx"], merged["grid"]["ny"], interval)
        profile = CutoffProfile(merged["smoothing"]["kind"], float(merged["smoothing"]["y_scale"]))
    except (ContractError, DomainError, ValueError, ZeroDivisionError) as e:
        raise ConfigError(str(e))

    if dio is not None:
        logger.info("alpha = %.16g, sigma = %.6g, tau = %.6g, rho = %d", alpha, dio.sigma, dio.tau, dio.rho)

    return RunConfig(
        subcommand=subcommand,
        document=merged,
        alpha=alpha,
        dio=dio,
        interval=interval,
        delta0=float(merged["delta0"]),
        grid=grid,
        tol=float(merged["tol"]),
        max_iter=merged["max_iter"],
        lipschitz0=float(merged["lipschitz0"]),
        output_dir=merged["output_dir"],
        seed=merged["seed"],
        threads=merged["threads"],
        profile=profile,
        pairs=merged["norms"]["pairs"],
        section=merged[subcommand],
    )


def load_config(path, subcommand):
    """Load a JSON or YAML configuration file and resolve it for a subcommand."""
    with open(path) as f:
        try:
            # PyYAML reads JSON exponents without a decimal point as strings
            document = json.load(f) if str(path).endswith(".json") else yaml.safe_load(f)
        except (ValueError, yaml.YAMLError) as e:
            raise ConfigError("could not parse {}: {}".format(path, e))
    return resolve(document, subcommand)
