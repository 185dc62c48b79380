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

from dataclasses import asdict, dataclass, field

# Terminal statuses of a run
CONVERGED = "Converged"
HYPOTHESIS_VIOLATED = "HypothesisViolated"
DOMAIN_EXHAUSTED = "DomainExhausted"
MAX_ITERATIONS = "MaxIterations"
STEP_FAILURE = "StepFailure"

# Columns of the per step table, in output order
STEP_COLUMNS = (
    "i",
    "N",
    "delta",
    "E0",
    "Emu",
    "U1",
    "generator_constant",
    "lipschitz",
    "f2_average",
    "k1_average",
    "k2_average",
    "intersection_margin",
    "interpolation_constant",
    "mu_effective",
)


@dataclass(frozen=True)
class StepRecord:
    i: int
    N: float
    delta: float
    E0: float
    Emu: float
    U1: float
    generator_constant: float
    lipschitz: float
    f2_average: float
    k1_average: float
    k2_average: float
    intersection_margin: float
    interpolation_constant: float
    mu_effective: int
    wall_ms: float = 0.0
    flags: dict = field(default_factory=dict)

    def row(self):
        return [getattr(self, c) for c in STEP_COLUMNS]

    def to_json(self):
        return asdict(self)


@dataclass(frozen=True)
class KamState:
    """Snapshot after i steps, f and k are the perturbations of U0 and T_alpha on T x I_delta."""

    i: int
    delta: float
    f: object
    k: object
    h_stack: tuple = ()
    lipschitz: float = 2.0
    history: tuple = ()

    @property
    def domain(self):
        return self.f.interval

    @property
    def last(self):
        return self.history[-1] if self.history else None


@dataclass(frozen=True)
class KamResult:
    status: str
    final_state: KamState
    H_total: object = None
    detail: str = ""
    preflight: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    @property
    def converged(self):
        return self.status == CONVERGED

    @property
    def steps(self):
        return list(self.final_state.history)

    def to_json(self):
        state = self.final_state
        return {
            "status": self.status,
            "detail": self.detail,
            "iterations": state.i,
            "delta_final": state.delta,
            "lipschitz_final": state.lipschitz,
            "preflight": self.preflight,
            "residuals": self.residuals,
            "steps": [r.to_json() for r in state.history],
            "H_total_c1_norm": None if self.H_total is None else self.H_total.c1_norm,
            "note": "finite step certificate: C0 conjugation residuals at the final step, no C-infinity claim",
        }
