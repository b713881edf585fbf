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


"""Tests for the core module."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import json
import os
import tempfile

import mock

from walgebra import commands
from walgebra import core
from walgebra import decorators
from walgebra import errors
from walgebra import report
from walgebra import testutils


def _Fake(status):
    @decorators.Command("setup", tag="Ex 0")
    def Fake(config):
        result = report.Report()
        result.Add("stub", status, detail="{} from {}".format(status, config.case))
        return {"case": config.case}, result

    return Fake


@decorators.Command("setup", tag="Ex 0")
def _Broken(config):
    raise errors.ConsistencyError("graded dimensions differ from K[S]")


def _TempPath(name):
    return os.path.join(tempfile.mkdtemp(), name)


class RunTest(testutils.BaseTestCase):
    def testRun(self):
        code, artifact = core.Run(commands.RunConfig("setup", case="sl2-principal"))
        self.assertEqual(code, core.EXIT_PASS)
        self.assertEqual(artifact["checks"], "Sec 1.1")
        self.assertEqual(artifact["config"]["case"], "sl2-principal")

    def testExitCodes(self):
        for status, code in [(report.PASS, 0), (report.FAIL, 1), (report.INCONCLUSIVE, 3)]:
            with mock.patch.dict(commands.COMMANDS, {"setup": _Fake(status)}):
                self.assertEqual(core.Run(commands.RunConfig("setup"))[0], code)


class MainTest(testutils.BaseTestCase):
    def testPass(self):
        with self.assertOutputMatches(stdout='"schemaVersion":1', stderr=None):
            artifact = core.Main(["setup", "--case", "sl2-principal"])
        self.assertEqual(artifact["status"], report.PASS)

    def testFailure(self):
        with mock.patch.dict(commands.COMMANDS, {"setup": _Fake(report.FAIL)}):
            with self.assertRaisesCliExit(1):
                core.Main(["setup", "--case", "sl2-principal"])

    def testInconclusive(self):
        with mock.patch.dict(commands.COMMANDS, {"setup": _Fake(report.INCONCLUSIVE)}):
            with self.assertRaises(core.CliExit) as context:
                with self.assertOutputMatches(stdout='"status":"inconclusive"'):
                    core.Main(["setup"])
        self.assertEqual(context.exception.code, 3)
        self.assertEqual(context.exception.artifact["payload"], {"case": None})

    def testConsistencyError(self):
        with mock.patch.dict(commands.COMMANDS, {"setup": _Broken}):
            with self.assertRaises(core.CliExit) as context:
                with self.assertOutputMatches(stdout=None, stderr="ERROR: .*graded dimensions differ"):
                    core.Main(["setup", "--case", "sl2-principal"])
        self.assertEqual(context.exception.code, 1)
        self.assertEqual(context.exception.artifact["error"]["kind"], "ConsistencyError")

    def testUsageError(self):
        with self.assertRaisesCliExit(2, "ERROR: .*below the largest slice degree"):
            core.Main(["walg", "--case", "sl3-principal", "--N", "4"])

    def testUnknownFlag(self):
        with self.assertRaisesCliExit(2, "ERROR: .*unrecognized arguments"):
            core.Main(["walg", "--N", "4", "--bogus"])

    def testUnknownCommand(self):
        with self.assertRaisesCliExit(2, "did you mean 'chars'"):
            core.Main(["chrs", "--case", "sl2-principal"])

    def testNoCommand(self):
        with self.assertRaisesCliExit(2, "usage: walgebra COMMAND"):
            core.Main([])

    def testHelp(self):
        with self.assertRaises(core.CliExit) as context:
            with self.assertOutputMatches(stdout="usage: walgebra COMMAND.*commands: chars, ideal-dagger"):
                core.Main(["--", "--help"])
        self.assertEqual(context.exception.code, 0)

    def testCommandHelp(self):
        with self.assertRaises(core.CliExit) as context:
            with self.assertOutputMatches(stdout=r"verify-gr.*\[Thm 0.1.0\].*dim gr_k U\(g,e\)"):
                core.Main(["verify-gr", "-h"])
        self.assertEqual(context.exception.code, 0)

    def testPretty(self):
        with self.assertOutputMatches(stdout="PASS.*setup.*Sec 1.1.*dim m"):
            core.Main(["setup", "--case", "sl2-principal", "--", "--pretty"])

    def testPrettyJson(self):
        with self.assertOutputMatches(stdout='\n  "checks": "Sec 1.1"'):
            core.Main(["setup", "--case", "sl2-principal", "--pretty", "--json"])

    def testVerbose(self):
        with self.assertOutputMatches(stderr="INFO: walgebra.core: Running setup"):
            core.Main(["setup", "--case", "sl2-principal", "-v"])

    def testOutputIsDeterministic(self):
        first, second = _TempPath("first.json"), _TempPath("second.json")
        for path in (first, second):
            with self.assertOutputMatches(stderr="INFO: Wrote the artifact to"):
                core.Main(["walg", "--case", "sl2-principal", "--N", "4", "--output", path])
        with io.open(first, encoding="utf-8") as f:
            text = f.read()
        with io.open(second, encoding="utf-8") as f:
            self.assertEqual(text, f.read())
        self.assertEqual(json.loads(text)["payload"]["N"], 4)

    def testErrorArtifactIsWritten(self):
        path = _TempPath("error.json")
        with self.assertRaisesCliExit(2):
            core.Main(["walg", "--case", "sl3-principal", "--N", "4", "--seed", "7", "-o", path])
        with io.open(path, encoding="utf-8") as f:
            artifact = json.load(f)
        self.assertEqual(artifact["status"], "error")
        self.assertEqual(artifact["error"]["kind"], "UsageError")
        self.assertEqual(artifact["seed"], 7)
        self.assertEqual(artifact["checks"], "Thm 0.1.0")

    def testErrorArtifactOfUnknownCommand(self):
        with self.assertRaises(core.CliExit) as context:
            with self.assertOutputMatches(stdout=None, stderr="did you mean"):
                core.Main(["chrs", "--case", "sl2-principal"])
        artifact = context.exception.artifact
        self.assertEqual(artifact["seed"], 0)
        self.assertNotIn("checks", artifact)

    def testGolden(self):
        golden = _TempPath("golden.json")
        with self.assertOutputMatches():
            core.Main(["walg", "--case", "sl2-principal", "--N", "4", "-o", golden])
        with self.assertOutputMatches(stderr="INFO: Wrote"):
            core.Main(["walg", "--case", "sl2-principal", "--N", "4", "--golden", golden, "-o", _TempPath("again.json")])
        with self.assertRaisesCliExit(1, r"ERROR: \$.config.N differs from .*golden.json: expected 4, got 5"):
            core.Main(["walg", "--case", "sl2-principal", "--N", "5", "--golden", golden])

    def testMissingGolden(self):
        with self.assertRaisesCliExit(2, "Golden file .* does not exist"):
            core.Main(["setup", "--case", "sl2-principal", "--golden", _TempPath("absent.json")])

    def testConfigFile(self):
        path = _TempPath("run.json")
        with io.open(path, "w", encoding="utf-8") as f:
            f.write(json.dumps({"command": "walg", "case": "sl3-principal", "N": 4}))
        with self.assertOutputMatches(stdout='"case":"sl2-principal"'):
            artifact = core.Main(["--config", path, "--case", "sl2-principal"])
        self.assertEqual(artifact["config"]["N"], 4)

    def testBadConfigFile(self):
        path = _TempPath("run.json")
        with io.open(path, "w", encoding="utf-8") as f:
            f.write('{"command": "walg",\n "N": }')
        with self.assertRaisesCliExit(2, "run.json:2:"):
            core.Main(["--config", path])

    def testMissingConfigFile(self):
        with self.assertRaisesCliExit(2, "does not exist"):
            core.Main(["--config", _TempPath("absent.json")])

    def testMaxDegreeCap(self):
        with mock.patch.dict(os.environ, {commands.MAX_DEGREE_VARIABLE: "3"}):
            with self.assertRaisesCliExit(2, "N = 3 is below"):
                core.Main(["walg", "--case", "sl2-principal", "--N", "8"])


if __name__ == "__main__":
    testutils.main()
