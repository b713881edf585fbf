# Copyright (C) 2026 The walgebra Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""The walgebra command line.

A run is named by a command and a configuration:

  walgebra verify-gr --type A --rank 2 --partition 3 --N 8
  walgebra chars --case sl3-minimal --N 8 --output chars.json
  walgebra skryabin --config run.json -- --pretty

Configuration values come from flags and from an optional JSON file given by
--config; flags override the file. Display flags must go after a separating
"--", or may be mixed in with the configuration flags:
  --json: Print the canonical JSON artifact (the default).
  --pretty: Print one line per check instead; with --json, indent the JSON.
  -v --verbose: Log progress to stderr.
  -h --help: Print usage, or the description of the given command.

The exit status is 0 when every check passed, 1 when a check failed or an
internal invariant broke, 2 on a usage, parse or domain error and 3 when a
check was inconclusive at the chosen bounds.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import inspect
import io
import logging
import os
import sys
from typing import List, Optional

from walgebra import artifacts
from walgebra import commands
from walgebra import decorators
from walgebra import errors
from walgebra import formatting
from walgebra import parser
from walgebra import report

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

_EXIT_CODES = {report.PASS: EXIT_PASS, report.FAIL: EXIT_FAIL, report.INCONCLUSIVE: EXIT_INCONCLUSIVE}
_MAX_SHOWN = 5

USAGE = """usage: walgebra COMMAND (--case NAME | --type T --rank R (--partition P | --e E)) [options] [-- display flags]

commands: {commands}
cases: sl2-principal, sl3-principal, sl3-minimal, sl3-minimal-even, sp4-subregular

options:
  --h-prime E         good grading element, defaults to h
  --N N               truncation degree (default 8, capped by $WALG_MAX_DEGREE)
  --bound B           degree bound of ideal-dagger and skryabin (default N)
  --max-length L      PBW length window of ideal-dagger (default 4)
  --generators 'P;Q'  ideal generators for ideal-dagger
  --module M          generator matrices for skryabin, e.g. '[[[0,1],[0,0]]]'
  --gk                also estimate the GK dimension in skryabin
  --trials T --sample-degree D --variables V --seed S   star-check sampling
  --config FILE       JSON configuration; flags override it
  --output FILE, -o   also write the artifact to FILE
  --golden FILE       compare the artifact with FILE; differences exit 1"""


class CliExit(SystemExit):  # pylint: disable=g-bad-exception-name
    """Raised by Main when a run does not exit with status 0.

    The artifact of the run, when there is one, is available on the `artifact`
    property. This exception inherits from SystemExit, so an uncaught CliExit
    exits the program without a stacktrace.
    """

    def __init__(self, code, artifact=None):
        """Constructs a CliExit exception.

        Args:
          code: (int) Exit code for the walgebra CLI.
          artifact: (dict) The artifact of the run, or None.
        """
        super(CliExit, self).__init__(code)
        self.artifact = artifact


def Run(config):
    """Runs the command of a RunConfig.

    Args:
      config: A commands.RunConfig.
    Returns:
      A tuple of the exit code and the artifact dict.
    Raises:
      UsageError, DomainError, ParseError: On bad input.
      ConsistencyError: If an invariant guaranteed by theory failed.
    """
    command = commands.GetCommand(config.command)
    tag = decorators.GetMetadata(command)[decorators.STATEMENT_TAG]
    logger.info("Running %s (%s)", config.command, tag)
    payload, result = command(config)
    artifact = artifacts.Build(config, tag, result, payload)
    return _EXIT_CODES[result.GetStatus()], artifact


def ParseArgs(args):
    # type: (List[str]) -> tuple
    """Splits command line args into configuration values and display flags.

    Returns:
      A tuple of the merged configuration values (a dict), their source for
      error messages and the parsed display flags.
    Raises:
      UsageError: On an unknown flag.
      ParseError: If the --config file is not a JSON object.
    """
    args, flag_args = parser.SeparateFlagArgs(args)
    display = parser.CreateParser().parse_args(flag_args)
    values = vars(parser.CreateConfigParser().parse_args(args))
    for flag in ("json", "pretty", "verbose", "help"):
        mixed = values.pop(flag)
        setattr(display, flag, getattr(display, flag) or mixed)
    config_path = values.pop("config")
    merged = {}
    source = "<flags>"
    if config_path is not None:
        if not os.path.exists(config_path):
            raise errors.UsageError("Configuration file {} does not exist".format(config_path))
        with io.open(config_path, encoding="utf-8") as f:
            merged.update(parser.ParseJsonConfig(f.read(), source=config_path))
        source = config_path
    merged.update({key: value for key, value in values.items() if value is not None})
    return merged, source, display


def _ConfigureLogging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(name)s: %(message)s"))
    package_logger = logging.getLogger("walgebra")
    package_logger.addHandler(handler)
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return handler


def _DisplayError(error):
    print(formatting.Error("ERROR: ") + str(error), file=sys.stderr)


def _HelpText(command_name):
    if command_name is None:
        return USAGE.format(commands=", ".join(commands.COMMANDS))
    command = commands.GetCommand(command_name)
    tag = decorators.GetMetadata(command)[decorators.STATEMENT_TAG]
    return "{} [{}]\n\n{}".format(formatting.Bold(command_name), tag, formatting.Indent(inspect.getdoc(command) or ""))


def _CheckGolden(artifact, path, code):
    if not os.path.exists(path):
        raise errors.UsageError("Golden file {} does not exist".format(path))
    differences = artifacts.CompareGolden(artifact, path)
    for where, expected, actual in differences[:_MAX_SHOWN]:
        print("ERROR: {} differs from {}: expected {}, got {}".format(where, path, expected, actual), file=sys.stderr)
    if len(differences) > _MAX_SHOWN:
        print("INFO: {} more differences".format(len(differences) - _MAX_SHOWN), file=sys.stderr)
    return EXIT_FAIL if differences else code


def _PrintArtifact(artifact, display):
    if display.pretty and not display.json:
        print(formatting.RenderArtifact(artifact))
    else:
        print(artifacts.Dumps(artifact, pretty=display.pretty))


def Main(argv=None):
    # type: (Optional[List[str]]) -> dict
    """The entry point of the walgebra command line.

    Args:
      argv: The arguments, without the program name; defaults to sys.argv[1:].
    Returns:
      The artifact of a run whose checks all passed.
    Raises:
      CliExit: With the exit code, whenever it is not 0, and on --help with 0.
    """
    args = sys.argv[1:] if argv is None else list(argv)
    try:
        values, source, display = ParseArgs(args)
    except errors.WalgebraError as e:
        _DisplayError(e)
        raise CliExit(EXIT_USAGE)

    handler = _ConfigureLogging(display.verbose)
    try:
        return _Main(values, source, display)
    finally:
        logging.getLogger("walgebra").removeHandler(handler)


def _ErrorArtifact(values, error, status):
    seed = values.get("seed", 0)
    try:
        seed = int(seed)
    except (TypeError, ValueError):
        pass
    fn = commands.COMMANDS.get(values.get("command"))
    tag = decorators.GetMetadata(fn).get(decorators.STATEMENT_TAG) if fn is not None else None
    return artifacts.BuildError(values, error, status, seed=seed, tag=tag)


def _Main(values, source, display):
    if display.help:
        try:
            print(_HelpText(values.get("command")))
        except errors.UsageError as e:
            _DisplayError(e)
            raise CliExit(EXIT_USAGE)
        raise CliExit(EXIT_PASS)
    if values.get("command") is None:
        print(_HelpText(None), file=sys.stderr)
        raise CliExit(EXIT_USAGE)

    output = values.get("output")
    try:
        config = commands.RunConfig.FromValues(values, source=source)
        code, artifact = Run(config)
        if config.golden is not None:
            code = _CheckGolden(artifact, config.golden, code)
    except errors.ConsistencyError as e:
        _DisplayError(e)
        code, artifact = EXIT_FAIL, _ErrorArtifact(values, e, report.FAIL)
    except (errors.UsageError, errors.DomainError) as e:
        _DisplayError(e)
        code, artifact = EXIT_USAGE, _ErrorArtifact(values, e, "error")

    if output is not None:
        artifacts.Write(artifact, output)
        print("INFO: Wrote the artifact to {}".format(output), file=sys.stderr)
    if "error" not in artifact:
        _PrintArtifact(artifact, display)
    if code != EXIT_PASS:
        raise CliExit(code, artifact)
    return artifact
