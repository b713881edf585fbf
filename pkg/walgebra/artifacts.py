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


"""Result artifacts: the JSON document a walgebra run writes.

Artifacts are canonical. Keys are sorted, separators are compact, rationals are
written 'p/q' and the document carries no timestamps, so two runs of one
configuration produce byte-identical files.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import json
import logging
from fractions import Fraction

import walgebra

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TOOL_NAME = "walgebra"


def _Canonical(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(key): _Canonical(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_Canonical(item) for item in value]
    return value


def Dumps(artifact, pretty=False):
    """Serializes an artifact canonically, or indented when pretty."""
    if pretty:
        return json.dumps(_Canonical(artifact), sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(_Canonical(artifact), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def Build(config, tag, result, payload):
    """Assembles the artifact of one run.

    Args:
      config: The RunConfig that was run.
      tag: The statement tag of the command, e.g. 'Thm 0.1.0'.
      result: The report.Report of the run.
      payload: The command's JSON-ready result.
    Returns:
      A dict ready for Dumps.
    """
    return _Canonical(
        {
            "schemaVersion": SCHEMA_VERSION,
            "tool": {"name": TOOL_NAME, "version": walgebra.__version__},
            "config": config.ToJson(),
            "seed": config.seed,
            "checks": tag,
            "status": result.GetStatus(),
            "report": result.ToJson(),
            "payload": payload,
        }
    )


def BuildError(config_values, error, status, seed=0, tag=None):
    """The artifact of a run that stopped with an exception.

    The seed is always recorded; `checks` only when the command was resolved.
    """
    artifact = {
        "schemaVersion": SCHEMA_VERSION,
        "tool": {"name": TOOL_NAME, "version": walgebra.__version__},
        "config": config_values,
        "seed": seed,
        "status": status,
        "error": {"kind": type(error).__name__, "message": str(error)},
    }
    if tag is not None:
        artifact["checks"] = tag
    return _Canonical(artifact)


def Write(artifact, path):
    with io.open(path, "w", encoding="utf-8") as f:
        f.write(Dumps(artifact))
        f.write("\n")
    logger.info("Wrote %s", path)


def Load(path):
    with io.open(path, encoding="utf-8") as f:
        return json.load(f)


def Differences(expected, actual, path="$"):
    """Paths at which two canonical artifacts differ, in document order.

    Args:
      expected: The golden artifact.
      actual: The artifact of this run.
      path: The path of the compared values, '$' for the document root.
    Returns:
      A list of (path, expected value, actual value) tuples; empty when equal.
    """
    if isinstance(expected, dict) and isinstance(actual, dict):
        found = []
        for key in sorted(set(expected) | set(actual)):
            found.extend(Differences(expected.get(key), actual.get(key), "{}.{}".format(path, key)))
        return found
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        found = []
        for index, (left, right) in enumerate(zip(expected, actual)):
            found.extend(Differences(left, right, "{}[{}]".format(path, index)))
        return found
    return [] if expected == actual else [(path, expected, actual)]


def CompareGolden(artifact, path):
    """Differences between an artifact and the golden file at path."""
    golden = Load(path)
    # The tool version may move without changing any result.
    golden.pop("tool", None)
    current = json.loads(Dumps(artifact))
    current.pop("tool", None)
    return Differences(golden, current)
