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

import csv
import os
from io import StringIO
from logging import getLogger
from tempfile import NamedTemporaryFile

import numpy as np
from simplejson import dumps

from bionet_simulator.analysis.snapshot import Snapshot
from bionet_simulator.bn_utility.bn_errors import SnapshotFormatError
from bionet_simulator.geometry.grid_topology import NodeClass
from bionet_simulator.storage.snapshot_storage_settings import SnapshotStorageSettings

log = getLogger("storage")

LEADING_COLUMNS = ('x', 'y', 'class')
ENERGY_COLUMNS = ('step', 't', 'E', 'dC_inf_over_dt', 'min_eig')
FIELD_ORDER = ('p', 'sigma', 'C', 'C11', 'C12', 'C22')


def format_value(value):
    """Shortest text that reads back to the same double."""
    return repr(float(value))


def atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    with NamedTemporaryFile('w', dir=directory, prefix='.tmp_', suffix='.part', delete=False,
                            encoding='utf-8', newline='') as temporary:
        temporary.write(text)
        temporary.flush()
        os.fsync(temporary.fileno())
    os.replace(temporary.name, path)


def snapshot_to_csv(snapshot):
    labels = [label for label in FIELD_ORDER if label in snapshot.labels]
    labels += [label for label in snapshot.labels if label not in labels]
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(list(LEADING_COLUMNS) + labels)
    coordinates = snapshot.coordinates()
    columns = [snapshot.field(label) for label in labels]
    for row, node_class in enumerate(snapshot.node_classes):
        writer.writerow([format_value(coordinates[row, 0]), format_value(coordinates[row, 1]),
                         NodeClass(int(node_class)).label] + [format_value(column[row]) for column in columns])
    return buffer.getvalue()


def _infer_resolution(xs, ys):
    spacing = []
    for values in (xs, ys):
        unique = np.unique(values)
        if len(unique) > 1:
            spacing.append(np.min(np.diff(unique)))
    if not spacing:
        raise SnapshotFormatError("Cannot infer the lattice resolution from a single node")
    return int(round(1.0 / min(spacing)))


def read_snapshot(path, n=None):
    try:
        with open(path, newline='', encoding='utf-8') as snapshot_file:
            rows = list(csv.reader(snapshot_file))
    except OSError as e:
        raise SnapshotFormatError("Cannot read snapshot '%s': %s" % (path, e)) from e
    if not rows or tuple(rows[0][:3]) != LEADING_COLUMNS or len(rows[0]) < 4:
        raise SnapshotFormatError("Snapshot '%s' does not start with the header x,y,class,<fields>" % path)
    header = rows[0]
    labels = header[3:]
    body = rows[1:]
    if not body:
        raise SnapshotFormatError("Snapshot '%s' has no nodes" % path)

    classes_by_label = {member.label: member.value for member in NodeClass}
    try:
        xs = np.array([float(row[0]) for row in body])
        ys = np.array([float(row[1]) for row in body])
        classes = np.array([classes_by_label[row[2]] for row in body], dtype=np.int8)
        values = np.array([[float(v) for v in row[3:]] for row in body])
    except (ValueError, KeyError, IndexError) as e:
        raise SnapshotFormatError("Malformed row in snapshot '%s': %s" % (path, e)) from e
    if values.shape != (len(body), len(labels)):
        raise SnapshotFormatError("Snapshot '%s' rows do not match its %i field columns" % (path, len(labels)))

    n = n if n is not None else _infer_resolution(xs, ys)
    node_ids = np.rint(ys * n).astype(np.int64) * (n + 1) + np.rint(xs * n).astype(np.int64)
    if np.any(np.diff(node_ids) <= 0):
        raise SnapshotFormatError("Snapshot '%s' nodes are not in row-major lattice order" % path)
    fields = {label: values[:, k] for k, label in enumerate(labels)}
    return Snapshot(n, node_ids, classes, fields)


class SnapshotStorage:
    def __init__(self, config):
        self.settings = config if isinstance(config, SnapshotStorageSettings) else SnapshotStorageSettings(config)
        self.__index = []
        self.init_out_dir_if_not_exist()

    def init_out_dir_if_not_exist(self):
        path = self.settings.get_out_dir()
        if not os.path.exists(path):
            try:
                os.makedirs(path)
            except OSError as e:
                log.error('Failed to create output folder! Error: %s', e)
                raise

    def path_of(self, file_name):
        return os.path.join(self.settings.get_out_dir(), file_name)

    @property
    def index(self):
        return list(self.__index)

    def snapshot_file_name(self, step=None):
        prefix = self.settings.get_snapshot_prefix()
        return "%sfinal.csv" % prefix if step is None else "%s%06i.csv" % (prefix, step)

    def write_snapshot(self, snapshot, final=False):
        file_name = self.snapshot_file_name(None if final else snapshot.step)
        atomic_write(self.path_of(file_name), snapshot_to_csv(snapshot))
        self.__index.append({'file': file_name, 'step': snapshot.step, 't': snapshot.time, 'final': final})
        log.debug("Stored snapshot of step %i in %s", snapshot.step, file_name)
        return file_name

    def write_energy_series(self, rows):
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(ENERGY_COLUMNS)
        for step, time, energy, measure, min_eigenvalue in rows:
            writer.writerow([int(step), format_value(time), format_value(energy), format_value(measure),
                             format_value(min_eigenvalue)])
        file_name = self.settings.get_energy_file_name()
        atomic_write(self.path_of(file_name), buffer.getvalue())
        log.debug("Stored %i energy rows in %s", len(rows), file_name)
        return file_name

    def write_index(self, schema_version):
        file_name = self.settings.get_index_file_name()
        atomic_write(self.path_of(file_name),
                     dumps({'schema_version': schema_version, 'snapshots': self.__index}, indent=2))
        return file_name

    def write_text(self, file_name, text):
        atomic_write(self.path_of(file_name), text)
        return file_name

    def read_energy_series(self):
        with open(self.path_of(self.settings.get_energy_file_name()), newline='', encoding='utf-8') as energy_file:
            reader = csv.DictReader(energy_file)
            return [(int(row['step']), float(row['t']), float(row['E']), float(row['dC_inf_over_dt']),
                     float(row['min_eig'])) for row in reader]
