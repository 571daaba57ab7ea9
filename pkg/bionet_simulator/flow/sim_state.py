#     Copyright 2024. ThingsBoard
#
#     Licensed under the Apache License, Version 2.0 (the "License");
#     you may not use this file except in compliance with the License.
#     You may obtain a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.

from enum import Enum


class TerminationReason(Enum):
    STEADY_STATE = 'steady-state'
    T_REACHED = 'T reached'
    ERROR = 'error'


class SimState:
    """Fields of one time level. p and sigma always belong to the conductivity c of the same state."""

    def __init__(self, step, time, c, p=None, sigma=None, energy=None, diagnostics=None):
        self.step = step
        self.time = time
        self.c = c
        self.p = p
        self.sigma = sigma
        self.energy = energy
        self.diagnostics = diagnostics if diagnostics is not None else {}

    @property
    def min_eigenvalue(self):
        return self.diagnostics.get('min_eigenvalue')

    @property
    def steady_state_measure(self):
        return self.diagnostics.get('steady_state_measure')

    @property
    def symmetry_residual(self):
        return self.diagnostics.get('symmetry_residual')

    def __repr__(self):
        return "SimState(step=%i, t=%.6g, E=%s)" % (self.step, self.time, self.energy)


class Trajectory:
    def __init__(self):
        self.snapshots = []
        self.energy_rows = []
        self.termination = TerminationReason.T_REACHED

    @property
    def final(self):
        return self.snapshots[-1] if self.snapshots else None

    @property
    def energies(self):
        return [row[2] for row in self.energy_rows]
