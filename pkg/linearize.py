#!/usr/bin/env python3

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

import argparse
import logging
import os
import sys

import twistkam.commands as commands
from twistkam.config import load_config
from twistkam.errors import ConfigError, DegenerateError, EngineError, HypothesisError
from twistkam.report import write_json

logger = logging.getLogger("linearize")

# Subcommand name to the function running it
COMMANDS = {
    "cohomology": commands.cohomology,
    "kam": commands.kam,
    "standard-map": commands.standard_map,
    "diagnose": commands.diagnose,
    "counterexample-2d": commands.counterexample_2d,
    "constants": commands.constants,
}


def refusal(error, output_path):
    """Report a hypothesis that failed while the configuration was resolved."""
    report = {
        "status": "HypothesisViolated",
        "hypothesis": error.which,
        "detail": str(error),
        "exit_code": error.exit_code,
    }
    if isinstance(error, DegenerateError):
        report["rational"] = {"p": error.p, "q": error.q}
    write_json(os.path.join(output_path, "report.json"), report)


def execute(subcommand, config_path, output_path=None, progress=True):
    """Load the configuration, run the subcommand and return its exit status."""
    try:
        config = load_config(config_path, subcommand)
    except OSError as e:
        logger.error("Could not read the configuration %s: %s", config_path, e)
        return ConfigError.exit_code
    except HypothesisError as e:
        logger.error("%s refused: %s", subcommand, e)
        refusal(e, output_path if output_path is not None else e.output_dir)
        return e.exit_code
    except EngineError as e:
        logger.error("%s", e)
        return e.exit_code

    output_path = output_path if output_path is not None else config.output_dir
    os.makedirs(output_path, exist_ok=True)

    try:
        return COMMANDS[subcommand](config, output_path, progress)
    except EngineError as e:
        logger.error("%s failed: %s", subcommand, e)
        write_json(
            os.path.join(output_path, "report.json"),
            {"status": "error", "error": type(e).__name__, "detail": str(e), "exit_code": e.exit_code},
        )
        return e.exit_code


def main(argv=None):

    # Add command parsers
    command = argparse.ArgumentParser(description="Simultaneous linearization of commuting cylinder maps")
    subcommands = command.add_subparsers(
        dest="command", help="The command to run from the script. See each help for more information."
    )
    subcommands.required = True

    # Add common arguments
    for name in COMMANDS:
        c = subcommands.add_parser(name)
        c.add_argument("--config", required=True, help="Path to the JSON or YAML configuration file")
        c.add_argument("--out", help="Output directory, overrides output_dir from the configuration")
        c.add_argument("--quiet", action="store_true", help="Only log warnings and hide progress bars")
        c.add_argument("--verbose", action="store_true", help="Log debugging detail")

    args = command.parse_args(argv)

    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    return execute(args.command, args.config, args.out, progress=not args.quiet)


if __name__ == "__main__":
    sys.exit(main())
