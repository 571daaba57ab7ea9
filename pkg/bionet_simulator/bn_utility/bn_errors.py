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

class BionetError(Exception):
    """Base for every failure raised by the simulator."""

    exit_code = 1


class EmptyDomainError(BionetError):
    pass


class CutCellError(BionetError):
    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class UnsupportedRuleError(BionetError):
    pass


class SolverError(BionetError):
    pass


class SolverConvergenceError(SolverError):
    def __init__(self, message, residual):
        super().__init__("%s (residual %.3e)" % (message, residual))
        self.residual = residual


class EntropyDomainError(BionetError):
    pass


class SimulationDivergedError(BionetError):
    def __init__(self, message, step):
        super().__init__("%s at step %i" % (message, step))
        self.step = step


class ConfigurationError(BionetError):
    exit_code = 2

    def __init__(self, message, key=None, line=None):
        details = []
        if key is not None:
            details.append("key '%s'" % key)
        if line is not None:
            details.append("line %i" % line)
        super().__init__(message + (" (%s)" % ", ".join(details) if details else ""))
        self.key = key
        self.line = line


class SnapshotFormatError(BionetError):
    pass


class AnalysisError(BionetError):
    pass
