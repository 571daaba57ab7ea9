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

from bionet_simulator.bn_utility.bn_errors import ConfigurationError
from bionet_simulator.service.constants import COMPATIBILITY_NOTE, TIME_UNITS_NOTE
from bionet_simulator.service.run_config import parse_key_value_text

MANIFEST_FIELDS = ('config_fingerprint', 'code_version', 'schema_version', 'wall_time', 'step_count',
                   'termination_reason', 'energy_series', 'snapshot_index', 'final_snapshot', 'partial',
                   'error', 'error_count', 'initial_condition', 'time_units', 'compatibility')


class RunManifest:
    """Summary of one run, written as key = value text beside its outputs."""

    def __init__(self, **fields):
        unknown = set(fields) - set(MANIFEST_FIELDS)
        if unknown:
            raise ValueError("Unknown manifest fields: %s" % ", ".join(sorted(unknown)))
        self.config_fingerprint = fields.get('config_fingerprint', '')
        self.code_version = fields.get('code_version', '')
        self.schema_version = fields.get('schema_version', '')
        self.wall_time = float(fields.get('wall_time', 0.0))
        self.step_count = int(fields.get('step_count', 0))
        self.termination_reason = fields.get('termination_reason', '')
        self.energy_series = fields.get('energy_series', '')
        self.snapshot_index = fields.get('snapshot_index', '')
        self.final_snapshot = fields.get('final_snapshot', '')
        partial = fields.get('partial', False)
        self.partial = partial if isinstance(partial, bool) else str(partial).lower() == 'true'
        self.error = fields.get('error', '')
        self.error_count = int(fields.get('error_count', 0))
        self.initial_condition = fields.get('initial_condition', '')
        self.time_units = fields.get('time_units', TIME_UNITS_NOTE)
        self.compatibility = fields.get('compatibility', COMPATIBILITY_NOTE)

    def referenced_files(self):
        return [name for name in (self.energy_series, self.snapshot_index, self.final_snapshot) if name]

    def to_text(self):
        lines = []
        for name in MANIFEST_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool):
                value = 'true' if value else 'false'
            elif isinstance(value, float):
                value = '%.3f' % value
            lines.append("%s = %s" % (name, str(value).replace('\n', ' ')))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        values, _ = parse_key_value_text(text)
        try:
            return cls(**values)
        except ValueError as e:
            raise ConfigurationError("Invalid manifest: %s" % e)

    def __repr__(self):
        return "RunManifest(steps=%i, termination=%s, partial=%s)" % (self.step_count, self.termination_reason,
                                                                     self.partial)
