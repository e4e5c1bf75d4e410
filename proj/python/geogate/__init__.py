# Copyright 2026 The geogate Authors
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
"""Shortest-path nonadiabatic geometric gates."""

from geogate._core import (
    ConvergenceError,
    DomainError,
    __version__,
    average_gate_fidelity,
    bessel_j1,
    gate_duration,
    geometric_phase,
    invert_bessel_j1,
    mhz_to_rad_per_ns,
    optimize,
    synthesize_pulse,
    target_unitary,
    two_qubit_fidelity,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "__version__",
    "average_gate_fidelity",
    "bessel_j1",
    "gate_duration",
    "geometric_phase",
    "invert_bessel_j1",
    "mhz_to_rad_per_ns",
    "optimize",
    "synthesize_pulse",
    "target_unitary",
    "two_qubit_fidelity",
]
