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

import numpy as np

from bionet_simulator.bn_utility.bn_errors import AnalysisError
from bionet_simulator.fem.nodal_field import SCALAR_LABELS, TENSOR_LABELS, frobenius_norm
from bionet_simulator.geometry.grid_topology import NodeClass

PRESSURE_LABELS = ('p', 'sigma')


class Snapshot:
    """
    Nodal values of one time level on the active lattice nodes, independent of the solver objects.
    Node ids are flat row-major lattice ids j * (n + 1) + i.
    """

    def __init__(self, n, node_ids, node_classes, fields, time=0.0, step=0):
        self.__n = int(n)
        self.__node_ids = np.asarray(node_ids, dtype=np.int64)
        self.__node_classes = np.asarray(node_classes, dtype=np.int8)
        self.__fields = {}
        for label, values in fields.items():
            values = np.asarray(values, dtype=float)
            if values.shape != self.__node_ids.shape:
                raise AnalysisError("Field '%s' has %i values for %i nodes" % (label, len(values), len(node_ids)))
            self.__fields[label] = values
        self.__time = float(time)
        self.__step = int(step)

    @classmethod
    def from_state(cls, space, state):
        fields = {}
        if state.p is not None:
            fields['p'] = state.p.values[:, 0]
        if state.sigma is not None:
            fields['sigma'] = state.sigma.values[:, 0]
        for k, label in enumerate(state.c.labels):
            fields[label] = state.c.values[:, k]
        return cls(space.n, space.node_ids, space.node_classes(), fields, time=state.time, step=state.step)

    @classmethod
    def from_grid(cls, grids, time=0.0, step=0):
        """Builds a snapshot from (n+1) x (n+1) arrays, NaN marking inactive nodes."""
        grids = {label: np.asarray(grid, dtype=float) for label, grid in grids.items()}
        first = next(iter(grids.values()))
        active = np.isfinite(first).ravel()
        node_ids = np.flatnonzero(active)
        classes = np.full(len(node_ids), NodeClass.INTERNAL.value)
        fields = {label: grid.ravel()[node_ids] for label, grid in grids.items()}
        return cls(first.shape[0] - 1, node_ids, classes, fields, time=time, step=step)

    @property
    def n(self):
        return self.__n

    @property
    def h(self):
        return 1.0 / self.__n

    @property
    def node_ids(self):
        return self.__node_ids

    @property
    def node_classes(self):
        return self.__node_classes

    @property
    def labels(self):
        return tuple(self.__fields)

    @property
    def time(self):
        return self.__time

    @property
    def step(self):
        return self.__step

    @property
    def node_count(self):
        return len(self.__node_ids)

    @property
    def conductivity_labels(self):
        if all(label in self.__fields for label in TENSOR_LABELS):
            return TENSOR_LABELS
        if all(label in self.__fields for label in SCALAR_LABELS):
            return SCALAR_LABELS
        return ()

    @property
    def is_tensor(self):
        return self.conductivity_labels == TENSOR_LABELS

    def field(self, label):
        try:
            return self.__fields[label]
        except KeyError:
            raise AnalysisError("Snapshot has no field '%s', available: %s" % (label, ", ".join(self.labels)))

    def fields(self):
        return dict(self.__fields)

    def conductivity_norm(self):
        labels = self.conductivity_labels
        if not labels:
            raise AnalysisError("Snapshot carries no conductivity field")
        return frobenius_norm(np.column_stack([self.__fields[label] for label in labels]))

    def scalar(self, label=None):
        """Values of a scalar field; None means C, which on a tensor snapshot is its Frobenius norm."""
        label = 'C' if label is None else label
        if label == 'C' and self.is_tensor:
            return self.conductivity_norm()
        return self.field(label)

    def coordinates(self):
        j, i = np.divmod(self.__node_ids, self.__n + 1)
        return np.column_stack((i / self.__n, j / self.__n))

    def grid(self, label=None, values=None):
        values = self.scalar(label) if values is None else values
        grid = np.full((self.__n + 1) ** 2, np.nan)
        grid[self.__node_ids] = values
        return grid.reshape(self.__n + 1, self.__n + 1)

    def with_fields(self, fields):
        return Snapshot(self.__n, self.__node_ids, self.__node_classes, fields, time=self.__time, step=self.__step)

    def __repr__(self):
        return "Snapshot(n=%i, nodes=%i, fields=%s, t=%.6g)" % (self.__n, self.node_count, ",".join(self.labels),
                                                                self.__time)


def restrict_to_lattice(snapshot, n_coarse, label=None):
    """Values at the nodes of the coarser lattice n_coarse, as (coarse node ids, values)."""
    if snapshot.n % n_coarse:
        raise AnalysisError("Lattice %i is not a refinement of %i" % (snapshot.n, n_coarse))
    ratio = snapshot.n // n_coarse
    j, i = np.divmod(snapshot.node_ids, snapshot.n + 1)
    on_coarse = (j % ratio == 0) & (i % ratio == 0)
    coarse_ids = (j[on_coarse] // ratio) * (n_coarse + 1) + i[on_coarse] // ratio
    return coarse_ids, snapshot.scalar(label)[on_coarse]


def common_lattice_values(first, second, label=None):
    """Aligned values of two snapshots on the nodes of their common coarse lattice active in both."""
    n_common = int(np.gcd(first.n, second.n))
    first_ids, first_values = restrict_to_lattice(first, n_common, label)
    second_ids, second_values = restrict_to_lattice(second, n_common, label)
    common, first_index, second_index = np.intersect1d(first_ids, second_ids, assume_unique=True,
                                                       return_indices=True)
    return first_values[first_index], second_values[second_index]


def sample_grid(snapshot, xs, ys, label=None):
    """Bilinear interpolant of a field at arbitrary points; NaN where a needed corner is inactive."""
    grid = snapshot.grid(label)
    n = snapshot.n
    xs = np.asarray(xs, dtype=float) * n
    ys = np.asarray(ys, dtype=float) * n
    i = np.clip(np.floor(xs).astype(np.int64), 0, n - 1)
    j = np.clip(np.floor(ys).astype(np.int64), 0, n - 1)
    xi = xs - i
    eta = ys - j
    return (grid[j, i] * (1 - xi) * (1 - eta) + grid[j, i + 1] * xi * (1 - eta)
            + grid[j + 1, i + 1] * xi * eta + grid[j + 1, i] * (1 - xi) * eta)


LOG_FLOOR = 1e-16


def log_field(snapshot, labels=None, floor=LOG_FLOOR):
    """Natural logarithm of the conductivity fields (or of the given labels), clamped below at floor."""
    labels = snapshot.conductivity_labels if labels is None else labels
    fields = snapshot.fields()
    for label in labels:
        fields[label] = np.log(np.maximum(snapshot.field(label), floor))
    return snapshot.with_fields(fields)


def energy_decay_violations(energies, rel_slack=1e-10):
    """Indices n >= 2 where E_n exceeds E_(n-1) by more than rel_slack relative to E_(n-1)."""
    energies = np.asarray(energies, dtype=float)
    if len(energies) < 3:
        return []
    previous = energies[1:-1]
    current = energies[2:]
    bad = current > previous + rel_slack * np.abs(previous)
    return [int(k) + 2 for k in np.flatnonzero(bad)]
