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
from os import listdir, path
from tempfile import TemporaryDirectory

import numpy as np
from simplejson import load

from bionet_simulator.analysis.snapshot import Snapshot
from bionet_simulator.bn_utility.bn_errors import SnapshotFormatError
from bionet_simulator.geometry.grid_topology import NodeClass
from bionet_simulator.storage.snapshot_storage import SnapshotStorage, read_snapshot, snapshot_to_csv
from tests.unit.BaseUnitTest import BaseUnitTest


def sample_snapshot(step=3):
    n = 4
    node_ids = np.array([6, 7, 8, 11, 12, 13])
    classes = np.array([NodeClass.GHOST.value, NodeClass.INTERNAL.value, NodeClass.GHOST.value,
                        NodeClass.INTERNAL.value, NodeClass.INTERNAL.value, NodeClass.GHOST.value])
    values = np.array([0.1, 1.0 / 3.0, 2.5e-17, -4.0, 1e300, 0.7])
    fields = {'C22': values * 3, 'p': values, 'C11': values + 1, 'C12': -values, 'sigma': values / 7}
    return Snapshot(n, node_ids, classes, fields, time=step * 0.25, step=step)


class SnapshotStorageTests(BaseUnitTest):

    def setUp(self):
        self.directory = TemporaryDirectory()
        self.out_dir = path.join(self.directory.name, 'run')
        self.storage = SnapshotStorage({'out_dir': self.out_dir, 'snapshot_every': 2})

    def tearDown(self):
        self.directory.cleanup()

    def test_column_order(self):
        header = snapshot_to_csv(sample_snapshot()).splitlines()[0]
        self.assertEqual("x,y,class,p,sigma,C11,C12,C22", header)

    def test_written_snapshot_reads_back_exactly(self):
        snapshot = sample_snapshot()
        file_name = self.storage.write_snapshot(snapshot)
        self.assertEqual('snapshot_000003.csv', file_name)
        restored = read_snapshot(path.join(self.out_dir, file_name))
        self.assertEqual(snapshot.n, restored.n)
        self.assertTrue(np.array_equal(snapshot.node_ids, restored.node_ids))
        self.assertTrue(np.array_equal(snapshot.node_classes, restored.node_classes))
        for label in snapshot.labels:
            self.assertTrue(np.array_equal(snapshot.field(label), restored.field(label)), label)

    def test_final_snapshot_and_index(self):
        self.storage.write_snapshot(sample_snapshot(2))
        self.assertEqual('snapshot_final.csv', self.storage.write_snapshot(sample_snapshot(5), final=True))
        index_name = self.storage.write_index('1.0')
        with open(path.join(self.out_dir, index_name)) as index_file:
            index = load(index_file)
        self.assertEqual('1.0', index['schema_version'])
        self.assertEqual(['snapshot_000002.csv', 'snapshot_final.csv'], [entry['file'] for entry in index['snapshots']])
        self.assertEqual([False, True], [entry['final'] for entry in index['snapshots']])
        self.assertFalse([name for name in listdir(self.out_dir) if name.endswith('.part')])

    def test_energy_series(self):
        rows = [(0, 0.0, 1.5, float('nan'), 1.0), (1, 0.1, 1.25, 2.5, 0.9)]
        self.storage.write_energy_series(rows)
        with open(path.join(self.out_dir, 'energy.csv')) as energy_file:
            self.assertEqual("step,t,E,dC_inf_over_dt,min_eig", energy_file.readline().strip())
        restored = self.storage.read_energy_series()
        self.assertEqual(rows[1], restored[1])
        self.assertTrue(np.isnan(restored[0][3]))

    def test_malformed_files(self):
        broken = path.join(self.out_dir, 'broken.csv')
        for text in ("", "a,b,c\n1,2,3\n", "x,y,class,C\n0.0,0.0,internal\n", "x,y,class,C\n0.0,0.0,unknown,1.0\n",
                     "x,y,class,C\n0.5,0.0,internal,1.0\n0.0,0.0,internal,1.0\n"):
            with open(broken, 'w') as broken_file:
                broken_file.write(text)
            with self.assertRaises(SnapshotFormatError, msg=text):
                read_snapshot(broken, n=2)
        with self.assertRaises(SnapshotFormatError):
            read_snapshot(path.join(self.out_dir, 'missing.csv'))


if __name__ == '__main__':
    unittest.main()
