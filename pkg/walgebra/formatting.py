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


"""Formatting utilities for the human readable output of a run."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import termcolor

from walgebra import report

ELLIPSIS = "..."

_STATUS_COLORS = {report.PASS: "green", report.FAIL: "red", report.INCONCLUSIVE: "yellow"}


def Indent(text, spaces=2):
    lines = text.split("\n")
    return "\n".join(" " * spaces + line if line else line for line in lines)


def Bold(text):
    return termcolor.colored(text, attrs=["bold"])


def Error(text):
    return termcolor.colored(text, color="red", attrs=["bold"])


def Status(status):
    return termcolor.colored(status.upper(), color=_STATUS_COLORS.get(status), attrs=["bold"])


def EllipsisTruncate(text, available_space, line_length=80):
    """Truncate text from the end with ellipsis."""
    if available_space < len(ELLIPSIS):
        available_space = line_length
    # No need to truncate
    if len(text) <= available_space:
        return text
    return text[: available_space - len(ELLIPSIS)] + ELLIPSIS


def RenderArtifact(artifact, width=80):
    """Renders an artifact as a status headline followed by one line per check.

    Args:
      artifact: A dict built by artifacts.Build.
      width: Details longer than this are truncated.
    Returns:
      The text to print.
    """
    config = artifact.get("config", {})
    headline = "{} {} [{}]".format(Status(artifact["status"]), Bold(str(config.get("command"))), artifact.get("checks"))
    lines = [headline]
    if "error" in artifact:
        lines.append(Indent(Error(artifact["error"]["message"])))
        return "\n".join(lines)
    for check in artifact["report"]["checks"]:
        line = "{} {}".format(Status(check["status"]), check["name"])
        if check.get("detail"):
            line += ": " + EllipsisTruncate(check["detail"], width - len(check["name"]))
        lines.append(Indent(line))
    return "\n".join(lines)
