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

import unittest
from io import StringIO
from math import pi
from os import environ, listdir, path
from tempfile import TemporaryDirectory
from unittest.mock import patch

from bionet_simulator.bn_simulator import main
from bionet_simulator.bn_utility.bn_errors import SimulationDivergedError
from bionet_simulator.service.bn_simulation_service import cmd_converge, cmd_distance, cmd_rotate, cmd_run, \
    final_snapshot
from bionet_simulator.service.constants import *
from bionet_simulator.service.run_config import RunConfig, serialize_config
from bionet_simulator.service.run_manifest import RunManifest
from bionet_simulator.storage.snapshot_storage import SnapshotStorage
from tests.unit.BaseUnitTest import BaseUnitTest


class RunManifestTests(BaseUnitTest):

    def test_text_round_trip(self):
        manifest = RunManifest(config_fingerprint='abc', code_version='1.0.0', step_count=5, partial=True,
                               termination_reason='error', error='diverged\nbadly', wall_time=1.23456)
        restored = RunManifest.from_text(manifest.to_text())
        self.assertEqual(5, restored.step_count)
        self.assertTrue(restored.partial)
        self.assertEqual('error', restored.termination_reason)
        self.assertEqual('diverged badly', restored.error)
        self.assertAlmostEqual(1.235, restored.wall_time, places=9)
        self.assertEqual(TIME_UNITS_NOTE, restored.time_units)

    def test_unknown_field(self):
        with self.assertRaises(ValueError):
            RunManifest(colour='red')


class SimulationServiceTests(BaseUnitTest):

    def setUp(self):
        self.directory = TemporaryDirectory()
        self.logs = patch.dict(environ, {'BN_SIM_LOGS_PATH': path.join(self.directory.name, 'logs')})
        self.logs.start()

    def tearDown(self):
        self.logs.stop()
        self.directory.cleanup()

    def _config(self, name='run', **values):
        settings = {N_PARAMETER: 8, T_PARAMETER: 0.5, SNAPSHOT_EVERY_PARAMETER: 2,
                    OUT_DIR_PARAMETER: path.join(self.directory.name, name)}
        settings.update(values)
        return RunConfig(settings)

    def _read(self, config, file_name):
        with open(path.join(config.out_dir, file_name), encoding='utf-8') as output_file:
            return output_file.read()

    def test_run_writes_outputs(self):
        config = self._config()
        manifest = cmd_run(config)
        files = set(listdir(config.out_dir))
        self.assertTrue({ENERGY_FILE_NAME, SNAPSHOT_INDEX_FILE_NAME, MANIFEST_FILE_NAME, 'snapshot_final.csv',
                         'snapshot_000000.csv', 'snapshot_000002.csv', 'snapshot_000004.csv'} <= files)
        self.assertEqual('T reached', manifest.termination_reason)
        self.assertEqual(4, manifest.step_count)
        self.assertFalse(manifest.partial)
        self.assertEqual(config.fingerprint(), manifest.config_fingerprint)

        rows = SnapshotStorage(config.storage_config()).read_energy_series()
        self.assertGreaterEqual(len(rows), config.n * config.t_final)
        self.assertEqual(list(range(len(rows))), [row[0] for row in rows])
        restored = RunManifest.from_text(self._read(config, MANIFEST_FILE_NAME))
        self.assertEqual(manifest.final_snapshot, restored.final_snapshot)
        for file_name in restored.referenced_files():
            self.assertIn(file_name, files)
        snapshot = final_snapshot(config, manifest)
        self.assertEqual(('p', 'sigma', 'C11', 'C12', 'C22'), snapshot.labels)

    def test_runs_are_deterministic(self):
        first = self._config('first')
        second = self._config('second')
        cmd_run(first)
        cmd_run(second)
        for file_name in (ENERGY_FILE_NAME, 'snapshot_final.csv', 'snapshot_000002.csv'):
            self.assertEqual(self._read(first, file_name), self._read(second, file_name), file_name)
        self.assertEqual(0.0, cmd_distance(path.join(first.out_dir, 'snapshot_final.csv'),
                                           path.join(second.out_dir, 'snapshot_final.csv')))

    def test_failed_run_leaves_partial_manifest(self):
        config = self._config()
        with patch('bionet_simulator.flow.gradient_flow.GradientFlow.step',
                   side_effect=SimulationDivergedError("Conductivity update produced non-finite values", 1)):
            with self.assertRaises(SimulationDivergedError):
                cmd_run(config)
        manifest = RunManifest.from_text(self._read(config, MANIFEST_FILE_NAME))
        self.assertTrue(manifest.partial)
        self.assertEqual('error', manifest.termination_reason)
        self.assertEqual('', manifest.final_snapshot)
        self.assertIn('non-finite', manifest.error)
        self.assertEqual(2, len(self._read(config, ENERGY_FILE_NAME).splitlines()))

    def test_convergence_study(self):
        config = self._config('converge', T=0.25, snapshot_every=0)
        rows = cmd_converge(config, [16, 8])
        self.assertEqual([8, 16], [row['N'] for row in rows])
        self.assertIsNone(rows[0]['distance'])
        self.assertGreaterEqual(rows[1]['distance'], 0.0)
        table = self._read(config, CONVERGENCE_FILE_NAME).splitlines()
        self.assertEqual('N,distance,order', table[0])
        self.assertEqual(3, len(table))

    def test_rotation_study(self):
        config = self._config('rotate', T=0.25, snapshot_every=0)
        rows = cmd_rotate(config, pi / 2, [8])
        self.assertEqual(1, len(rows))
        self.assertGreaterEqual(rows[0]['distance'], 0.0)
        self.assertTrue(path.exists(path.join(config.out_dir, ROTATION_FILE_NAME)))
        for run_name in ('N8_unrotated', 'N8_rotated'):
            self.assertTrue(path.exists(path.join(config.out_dir, run_name, MANIFEST_FILE_NAME)))

    def test_command_line(self):
        config = self._config('cli')
        config_path = path.join(self.directory.name, 'cli.conf')
        with open(config_path, 'w', encoding='utf-8') as config_file:
            config_file.write(serialize_config(config))
        out_dir = path.join(self.directory.name, 'cli_out')
        self.assertEqual(0, main(['run', '--config', config_path, '--out', out_dir]))
        self.assertTrue(path.exists(path.join(out_dir, MANIFEST_FILE_NAME)))

        with patch('sys.stdout', new_callable=StringIO) as output:
            self.assertEqual(0, main(['order', '4', '1', '--rho', '2']))
        self.assertEqual('2.0', output.getvalue().strip())

    def test_command_line_errors(self):
        config_path = path.join(self.directory.name, 'bad.conf')
        with open(config_path, 'w', encoding='utf-8') as config_file:
            config_file.write("domain = square\n")
        with patch('sys.stderr', new_callable=StringIO):
            self.assertEqual(2, main(['run', '--config', config_path]))
            self.assertEqual(2, main(['run', '--config', path.join(self.directory.name, 'missing.conf')]))
            self.assertEqual(1, main(['order', '0', '1']))


if __name__ == '__main__':
    unittest.main()
