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

import numbers
import re

# Subcommands, each owning the configuration section of the same name
SUBCOMMANDS = ("cohomology", "kam", "standard-map", "diagnose", "counterexample-2d", "constants")

# Subcommands that need the rotation number
NEEDS_ALPHA = ("cohomology", "kam", "diagnose", "constants")

# Subcommands that iterate or probe a commuting pair
NEEDS_PAIR = ("kam", "diagnose")

COMMON_DEFAULTS = {
    "sigma": "auto:10000",
    "tau": "auto:10000",
    "check_bound": 10000,
    "interval": {"lo": -0.25, "hi": 0.25},
    "delta0": 0.25,
    "grid": {"nx": 64, "ny": 32},
    "tol": 1e-9,
    "max_iter": 12,
    "lipschitz0": 2.0,
    "output_dir": "output",
    "seed": 0,
    "threads": 1,
    "smoothing": {"kind": "bump", "y_scale": 1.0},
    "norms": {"pairs": 4096},
}

SECTION_DEFAULTS = {
    "cohomology": {
        "corpus_size": 10,
        "max_mode": 4,
        "max_degree": 4,
        "order": 0,
        "bounds": {"N": [4, 8, 16], "s": 0, "l": [1, 2, 3]},
    },
    "kam": {"commute_tol": 1e-8, "semiconjugacy_tol": 1e-8},
    "diagnose": {"commute_tol": 1e-8, "semiconjugacy_tol": 1e-8, "y_samples": 64, "scaling": [1e-2, 3e-3, 1e-3]},
    "standard-map": {"epsilon": 0.9, "q": 3, "r": 2, "seeds": 50, "iterations": 2000, "x0": 0.0, "wrap": 1.0},
    "counterexample-2d": {"delta": 0.05, "n_scan": 100000, "eta": 0.0},
    "constants": {"M": 10000, "convergents": 12},
}

PAIR_DEFAULTS = {
    "manufactured": {"c1_norm": 1e-3, "margin": 0.05},
    "expressions": {"pert": {"f1": "0", "f2": "0", "k1": "0", "k2": "0"}, "strict": True},
    "rational": {"p": 1, "q": 3, "epsilon": 0.1, "r": 2},
    "identity": {},
}

SEMICONJUGACY_DEFAULTS = {
    "projection": {"lipschitz": 2.0},
    "manufactured": {},
    "expression": {"v": "0"},
}

_AUTO = re.compile(r"^auto:(\d+)$")
_FRACTION = re.compile(r"^\s*\d+\s*/\s*\d+\s*$")


def _is_number(v):
    return isinstance(v, numbers.Real) and not isinstance(v, bool)


def _is_int(v):
    return isinstance(v, numbers.Integral) and not isinstance(v, bool)


def number(path, v):
    return [] if _is_number(v) else ["{} must be a number, got {!r}".format(path, v)]


def positive(path, v):
    if not _is_number(v):
        return ["{} must be a number, got {!r}".format(path, v)]
    return [] if v > 0 else ["{} must be positive, got {!r}".format(path, v)]


def integer(minimum):
    def check(path, v):
        if not _is_int(v) or v < minimum:
            return ["{} must be an integer >= {}, got {!r}".format(path, minimum, v)]
        return []

    return check


def string(path, v):
    return [] if isinstance(v, str) else ["{} must be a string, got {!r}".format(path, v)]


def boolean(path, v):
    return [] if isinstance(v, bool) else ["{} must be true or false, got {!r}".format(path, v)]


def one_of(*choices):
    def check(path, v):
        return [] if v in choices else ["{} must be one of {}, got {!r}".format(path, ", ".join(choices), v)]

    return check


def number_list(path, v):
    if not isinstance(v, list) or len(v) == 0 or not all(_is_number(x) and x > 0 for x in v):
        return ["{} must be a non-empty list of positive numbers, got {!r}".format(path, v)]
    return []


def alpha(path, v):
    if v == "golden" or (isinstance(v, str) and _FRACTION.match(v)):
        return []
    if _is_number(v) and 0 < v < 1:
        return []
    return ["{} must be a number in (0, 1), \"golden\" or a fraction \"p/q\", got {!r}".format(path, v)]


def auto_positive(path, v):
    if isinstance(v, str) and _AUTO.match(v):
        return []
    return positive(path, v)


def auto_bound(v):
    """M of an "auto:M" value, None for explicit numbers."""
    match = _AUTO.match(v) if isinstance(v, str) else None
    return int(match.group(1)) if match else None


def bracket(path, v):
    if not isinstance(v, list) or len(v) != 2 or not all(_is_number(x) for x in v) or not v[0] < v[1]:
        return ["{} must be a list [lo, hi] with lo < hi, got {!r}".format(path, v)]
    return []


PAIR_SCHEMAS = {
    "manufactured": {"kind": string, "c1_norm": positive, "margin": positive},
    "expressions": {
        "kind": string,
        "pert": {"f1": string, "f2": string, "k1": string, "k2": string},
        "frequency": {"omega": string, "omega_inv": string, "bracket": bracket},
        "strict": boolean,
    },
    "rational": {"kind": string, "p": integer(0), "q": integer(1), "epsilon": number, "r": integer(0)},
    "identity": {"kind": string},
}

SEMICONJUGACY_SCHEMAS = {
    "projection": {"kind": string, "lipschitz": positive},
    "manufactured": {"kind": string},
    "expression": {"kind": string, "v": string, "lipschitz": positive},
}


def tagged(schemas):
    """Validator for a dictionary whose "kind" picks the schema of the remaining keys."""

    def check(path, v):
        if not isinstance(v, dict):
            return ["{} must be a mapping, got {!r}".format(path, v)]
        kind = v.get("kind")
        if kind not in schemas:
            return ["{}.kind must be one of {}, got {!r}".format(path, ", ".join(schemas), kind)]
        return validate(v, schemas[kind], path)

    return check


PAIR_SECTION = {"pair": tagged(PAIR_SCHEMAS), "semiconjugacy": tagged(SEMICONJUGACY_SCHEMAS)}

SCHEMA = {
    "alpha": alpha,
    "sigma": auto_positive,
    "tau": auto_positive,
    "check_bound": integer(1),
    "interval": {"lo": number, "hi": number},
    "delta0": positive,
    "grid": {"nx": integer(8), "ny": integer(4)},
    "tol": positive,
    "max_iter": integer(0),
    "lipschitz0": positive,
    "output_dir": string,
    "seed": integer(0),
    "threads": integer(1),
    "smoothing": {"kind": one_of("bump", "quintic"), "y_scale": positive},
    "norms": {"pairs": integer(1)},
    "cohomology": {
        "corpus_size": integer(1),
        "max_mode": integer(0),
        "max_degree": integer(0),
        "order": integer(0),
        "bounds": {"N": number_list, "s": integer(0), "l": number_list},
    },
    "kam": {"commute_tol": positive, "semiconjugacy_tol": positive, **PAIR_SECTION},
    "diagnose": {
        "commute_tol": positive,
        "semiconjugacy_tol": positive,
        "y_samples": integer(2),
        "scaling": number_list,
        **PAIR_SECTION,
    },
    "standard-map": {
        "epsilon": number,
        "q": integer(1),
        "r": integer(0),
        "seeds": integer(1),
        "iterations": integer(1),
        "x0": number,
        "wrap": positive,
        "closeness": positive,
    },
    "counterexample-2d": {"delta": positive, "n_scan": integer(1), "eta": number},
    "constants": {"M": integer(100), "convergents": integer(1)},
}


def validate(document, schema, path=""):
    """All violations of document against schema, unknown keys included."""
    violations = []
    for key, value in document.items():
        where = "{}.{}".format(path, key) if path else key
        if key not in schema:
            violations.append("unknown key '{}'".format(where))
        elif isinstance(schema[key], dict):
            if isinstance(value, dict):
                violations.extend(validate(value, schema[key], where))
            else:
                violations.append("{} must be a mapping, got {!r}".format(where, value))
        else:
            violations.extend(schema[key](where, value))
    return violations
