# Copyright 2026 The globent Authors
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

"""Bipartition entanglement monotones and the global entanglement measure R."""

from ._globent import (
    DegenerateGround,
    GlobentError,
    InputError,
    NumericalError,
    eta,
    eta_profile,
    fixture,
    fixture_names,
    global_r,
    ground_state,
    hamiltonian,
    maximize_r,
    measure,
    mw,
    pauli_expand,
    reduced_density,
    scott,
    sweep_r,
    tilde_eta,
    tilde_r,
)

__version__ = "0.1.0"
