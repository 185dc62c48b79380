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

import hashlib
import json
import math
import os

import numpy as np

from .. import __version__


def _plain(value):
    # numpy scalars and arrays, tuples and non-finite floats into JSON values
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    return value


def canonical_json(document):
    return json.dumps(_plain(document), sort_keys=True, separators=(",", ":"))


def config_digest(document):
    return hashlib.sha256(canonical_json(document).encode("utf-8")).hexdigest()


def reproducibility(config):
    return {
        "config_sha256": config_digest(config.document),
        "engine_version": __version__,
        "seed": config.seed,
        "subcommand": config.subcommand,
    }


def write_json(path, document):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w") as f:
        json.dump(_plain(document), f, sort_keys=True, indent=2)
        f.write("\n")


def _cell(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "%.17g" % float(value)


def write_csv(path, header, rows):
    """Comma separated table with a header line, floats written with 17 significant digits."""
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_cell(v) for v in row) + "\n")


def write_table(path, header, rows, fmt="%.17g"):
    """A numeric table as CSV, fmt applies per column when given as a list."""
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    rows = np.asarray(rows, dtype=float).reshape(-1, len(header))
    np.savetxt(path, rows, fmt=fmt, comments="", header=",".join(header), delimiter=",")


def write_report(output_path, config, body):
    """report.json with the reproducibility stanza, and the configuration it was produced from."""
    write_json(os.path.join(output_path, "config.json"), config.document)
    write_json(os.path.join(output_path, "report.json"), {**body, "reproducibility": reproducibility(config)})
