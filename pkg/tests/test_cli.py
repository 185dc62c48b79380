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

"""The command line: exit codes and the artifacts each subcommand writes."""

import json
import os

from linearize import execute, main
from twistkam.kam import STEP_COLUMNS


def read_report(path):
    with open(os.path.join(path, "report.json")) as f:
        return json.load(f)


def write_config(path, document):
    with open(path, "w") as f:
        json.dump(document, f)
    return str(path)


def test_kam_on_manufactured_pair(config_path, tmp_path):
    assert execute("kam", config_path("kam_manufactured.json"), str(tmp_path), progress=False) == 0

    report = read_report(tmp_path)
    assert report["kam"]["status"] == "Converged"
    assert report["kam"]["residuals"]["F"] <= 1e-8
    assert report["inverse"]["right"] <= 1e-10
    assert len(report["reproducibility"]["config_sha256"]) == 64

    with open(tmp_path / "steps.csv") as f:
        lines = f.read().splitlines()
    assert lines[0] == ",".join(STEP_COLUMNS)
    assert len(lines) == report["kam"]["iterations"] + 2


def test_kam_refuses_rational_rotation(config_path, tmp_path):
    assert execute("kam", config_path("kam_rational.json"), str(tmp_path), progress=False) == 2
    report = read_report(tmp_path)
    assert report["kam"]["status"] == "HypothesisViolated"
    assert report["kam"]["detail"] == "diophantine"


def test_rational_rotation_with_estimated_constants(tmp_path):
    document = {
        "alpha": "1/3",
        "kam": {"pair": {"kind": "rational", "p": 1, "q": 3}, "semiconjugacy": {"kind": "projection"}},
    }
    path = write_config(tmp_path / "kam.json", document)
    out = tmp_path / "out"

    assert execute("kam", path, str(out), progress=False) == 2
    report = read_report(out)
    assert report["status"] == "HypothesisViolated"
    assert report["hypothesis"] == "diophantine"
    assert report["rational"] == {"p": 1, "q": 3}


def test_kam_refuses_pair_without_intersection(config_path, tmp_path):
    assert execute("kam", config_path("kam_no_intersection.json"), str(tmp_path), progress=False) == 2
    assert read_report(tmp_path)["kam"]["detail"] == "intersection"


def test_counterexample(config_path, tmp_path):
    assert execute("counterexample-2d", config_path("counterexample_2d.json"), str(tmp_path), progress=False) == 0
    report = read_report(tmp_path)
    assert report["min_gap"] > 0
    assert report["disjoint"]
    assert "perturbed" in report


def test_standard_map_is_deterministic(tmp_path):
    document = {
        "alpha": "golden",
        "interval": {"lo": 0.0, "hi": 1.0},
        "grid": {"nx": 64, "ny": 8},
        "standard-map": {"epsilon": 0.9, "seeds": 5, "iterations": 20, "closeness": 0.01},
    }
    path = write_config(tmp_path / "standard_map.json", document)

    contents = []
    for run in ("a", "b"):
        out = str(tmp_path / run)
        assert execute("standard-map", path, out, progress=False) == 0
        with open(os.path.join(out, "portrait.csv"), "rb") as f:
            contents.append(f.read())

    assert contents[0] == contents[1]
    assert len(contents[0].splitlines()) == 101

    report = read_report(str(tmp_path / "a"))
    assert report["rows"] == 100
    assert (report["counterexample"]["p"], report["counterexample"]["q"]) == (5, 8)
    assert report["counterexample"]["commutator"] <= 1e-12


def test_constants(config_path, tmp_path):
    assert execute("constants", config_path("constants.json"), str(tmp_path), progress=False) == 0
    report = read_report(tmp_path)
    assert 0.99 <= report["tau"] <= 1.05
    assert report["rho"] == int(report["tau"]) + 2
    assert report["convergents"][:4] == [[0, 1], [1, 1], [1, 2], [2, 3]]
    assert os.path.exists(tmp_path / "constants.csv")


def test_diagnose_manufactured_pair(config_path, tmp_path):
    assert execute("diagnose", config_path("diagnose.json"), str(tmp_path), progress=False) == 0
    report = read_report(tmp_path)
    assert report["first_failed"] is None
    assert report["commutator"]["direct"] <= 1e-9
    assert report["scaling"]["operator_slope"] >= 1.8


def test_missing_configuration(tmp_path):
    assert execute("kam", str(tmp_path / "missing.json"), str(tmp_path), progress=False) == 4


def test_invalid_configuration(tmp_path):
    path = write_config(tmp_path / "bad.json", {"alpha": "golden", "bogus": True})
    assert execute("constants", path, str(tmp_path / "out"), progress=False) == 4
    assert not os.path.exists(tmp_path / "out")


def test_main_parses_arguments(config_path, tmp_path):
    argv = ["counterexample-2d", "--config", config_path("counterexample_2d.json"), "--out", str(tmp_path), "--quiet"]
    assert main(argv) == 0
    assert os.path.exists(tmp_path / "config.json")
