# Copyright 2026 The grover-mps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Grover search on statevector and MPS backends."""

from grover_mps._core import (
    CapacityExceeded,
    Error,
    InvalidGate,
    InvalidInput,
    IoError,
    NumericalFailure,
    csv_header,
    iteration_count,
    parse_csv,
    predicted_success_probability,
    run,
    sweep,
    theta,
)

__all__ = [
    "CapacityExceeded",
    "Error",
    "InvalidGate",
    "InvalidInput",
    "IoError",
    "NumericalFailure",
    "csv_header",
    "iteration_count",
    "parse_csv",
    "predicted_success_probability",
    "run",
    "sweep",
    "theta",
]
