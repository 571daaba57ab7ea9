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


class SnapshotStorageSettings:
    def __init__(self, config):
        self.out_dir = config.get("out_dir", "./output")
        self.snapshot_every = int(config.get("snapshot_every", 0))
        self.energy_file_name = config.get("energy_file_name", "energy.csv")
        self.index_file_name = config.get("index_file_name", "snapshots.json")
        self.manifest_file_name = config.get("manifest_file_name", "manifest.txt")
        self.snapshot_prefix = config.get("snapshot_prefix", "snapshot_")

    def get_out_dir(self):
        return self.out_dir

    def get_snapshot_every(self):
        return self.snapshot_every

    def get_energy_file_name(self):
        return self.energy_file_name

    def get_index_file_name(self):
        return self.index_file_name

    def get_manifest_file_name(self):
        return self.manifest_file_name

    def get_snapshot_prefix(self):
        return self.snapshot_prefix
