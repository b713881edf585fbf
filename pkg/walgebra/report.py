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

"""This module has classes for recording the outcome of a verification run.

A Report consists of a sequence of CheckElement objects. Each element records
one check performed during a run: a relation tested on matrices, a degree whose
dimension was compared, an associativity trial. Each element has a status, and
the status of the report is derived from its elements: fail if any element
failed, otherwise inconclusive if any element was inconclusive, otherwise pass.

Checks that are allowed to fail record their outcome in a Report instead of
raising, so a caller always receives the full list of what was checked.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"

_SEVERITY = {PASS: 0, INCONCLUSIVE: 1, FAIL: 2}


class Report(object):
    """A Report represents the checks performed during a single verification.

    Elements are kept in the order they were added. An empty report passes.
    """

    def __init__(self, name=None, tag=None):
        """Instantiates a Report.

        Args:
          name: Short name of what was verified, e.g. 'associativity'.
          tag: The statement the report checks, e.g. 'Thm 0.1.0'.
        """
        self.name = name
        self.tag = tag
        self.elements = []

    def AddCheck(self, name, ok, detail="", data=None):
        """Adds a pass element when `ok` is true, otherwise a fail element."""
        self.Add(name, PASS if ok else FAIL, detail=detail, data=data)
        return ok

    def AddPass(self, name, detail="", data=None):
        self.Add(name, PASS, detail=detail, data=data)

    def AddFail(self, name, detail="", data=None):
        self.Add(name, FAIL, detail=detail, data=data)

    def AddInconclusive(self, name, detail="", data=None):
        self.Add(name, INCONCLUSIVE, detail=detail, data=data)

    def Add(self, name, status, detail="", data=None):
        if status not in _SEVERITY:
            raise ValueError("Unknown check status: {!r}".format(status))
        self.elements.append(CheckElement(name, status, detail=detail, data=data))

    def Extend(self, other, prefix=None):
        """Appends the elements of another report, optionally prefixing their names."""
        for element in other.elements:
            name = element.name if prefix is None else "{}: {}".format(prefix, element.name)
            self.elements.append(CheckElement(name, element.status, detail=element.detail, data=element.data))

    def GetStatus(self):
        status = PASS
        for element in self.elements:
            if _SEVERITY[element.status] > _SEVERITY[status]:
                status = element.status
        return status

    def Passed(self):
        return self.GetStatus() == PASS

    def HasFailure(self):
        return self.GetStatus() == FAIL

    def GetFirstFailure(self):
        """Returns the first failed element, or None if nothing failed."""
        for element in self.elements:
            if element.status == FAIL:
                return element
        return None

    def ToJson(self):
        return {
            "status": self.GetStatus(),
            "checks": [element.ToJson() for element in self.elements],
        }

    def __str__(self):
        lines = []
        for index, element in enumerate(self.elements):
            line = "{index}. {element}".format(index=index + 1, element=element)
            lines.append(line)
        return "\n".join(lines)


class CheckElement(object):
    """A CheckElement represents a single check performed during a run."""

    def __init__(self, name, status, detail="", data=None):
        """Instantiates a CheckElement.

        Args:
          name: What was checked, e.g. '[Θ1,Θ2]' or 'degree 6'.
          status: One of PASS, FAIL and INCONCLUSIVE.
          detail: Human readable explanation, typically the offending term.
          data: Optional JSON-compatible payload.
        """
        self.name = name
        self.status = status
        self.detail = detail
        self.data = data

    def ToJson(self):
        result = {"name": self.name, "status": self.status}
        if self.detail:
            result["detail"] = self.detail
        if self.data is not None:
            result["data"] = self.data
        return result

    def __str__(self):
        # Format is: {status} {name}: {detail}
        string = "{status} {name}".format(status=self.status, name=self.name)
        if self.detail:
            string += ": {detail}".format(detail=self.detail)
        return string
