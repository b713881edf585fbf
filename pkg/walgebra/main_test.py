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


"""Test using walgebra via `python -m walgebra`."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from walgebra import __main__
from walgebra import core
from walgebra import testutils


class MainModuleTest(testutils.BaseTestCase):
    """Tests to verify the behavior of __main__ (python -m walgebra)."""

    def testProgramNameIsDropped(self):
        with self.assertOutputMatches('"command":"setup"'):
            __main__.main(["__main__.py", "setup", "--case", "sl2-principal"])

    def testExitCode(self):
        with self.assertRaisesCliExit(2, "usage"):
            __main__.main(["__main__.py"])

    def testCliExitIsSystemExit(self):
        self.assertTrue(issubclass(core.CliExit, SystemExit))


if __name__ == "__main__":
    testutils.main()
