# Copyright 2026 The subsetsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Subset-sum solvers with element-count instrumentation."""

from ._core import (
    CapacityError,
    Instance,
    ParseError,
    UsageError,
    analytic_cost,
    fit_exponent,
    generate,
    read_json,
    read_text,
    solve,
    solve_pair,
    verify,
)

__all__ = [
    "CapacityError",
    "Instance",
    "ParseError",
    "UsageError",
    "analytic_cost",
    "fit_exponent",
    "generate",
    "read_json",
    "read_text",
    "solve",
    "solve_pair",
    "verify",
]
