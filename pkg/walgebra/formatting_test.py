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


"""Tests for formatting.py."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from walgebra import formatting
from walgebra import report
from walgebra import testutils

LINE_LENGTH = 80


def _Artifact(checks, status=report.PASS):
    return {
        "status": status,
        "checks": "Thm 0.1.0",
        "config": {"command": "verify-gr"},
        "report": {"status": status, "checks": checks},
    }


class FormattingTest(testutils.BaseTestCase):
    def test_bold(self):
        text = formatting.Bold("hello")
        self.assertIn(text, ["hello", "\x1b[1mhello\x1b[0m"])

    def test_indent_multiple_lines(self):
        text = formatting.Indent("degree 0\ndegree 1", spaces=2)
        self.assertEqual("  degree 0\n  degree 1", text)

    def test_status(self):
        self.assertIn("FAIL", formatting.Status(report.FAIL))
        self.assertIn("INCONCLUSIVE", formatting.Status(report.INCONCLUSIVE))

    def test_ellipsis_truncate(self):
        truncated_text = formatting.EllipsisTruncate("dim gr_4 U(g,e) = 2", available_space=10, line_length=LINE_LENGTH)
        self.assertEqual("dim gr_...", truncated_text)

    def test_ellipsis_truncate_not_enough_space(self):
        text = "dim gr_4 U(g,e) = 2"
        self.assertEqual(text, formatting.EllipsisTruncate(text, available_space=2, line_length=LINE_LENGTH))

    def test_render_artifact(self):
        artifact = _Artifact(
            [
                {"name": "degree 0", "status": report.PASS, "detail": "dim gr_0 U(g,e) = 1, dim K[S]_0 = 1"},
                {"name": "degree 1", "status": report.PASS},
            ]
        )
        lines = formatting.RenderArtifact(artifact).split("\n")
        self.assertEqual(len(lines), 3)
        self.assertIn("verify-gr", lines[0])
        self.assertIn("[Thm 0.1.0]", lines[0])
        self.assertTrue(lines[1].startswith("  "))
        self.assertIn("degree 0: dim gr_0", lines[1])

    def test_render_error(self):
        artifact = {
            "status": "error",
            "config": {"command": "walg"},
            "error": {"kind": "UsageError", "message": "N = 2 is below the largest slice degree 4"},
        }
        text = formatting.RenderArtifact(artifact)
        self.assertIn("largest slice degree", text)


if __name__ == "__main__":
    testutils.main()
