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


"""Exact computations with finite W-algebras U(g,e) of classical Lie algebras."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

__version__ = "0.1.0"

from walgebra.core import Main  # pylint: disable=g-import-not-at-top
from walgebra.core import Run  # pylint: disable=g-import-not-at-top

__all__ = ["Main", "Run"]
