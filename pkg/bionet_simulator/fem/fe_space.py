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
from logging import getLogger

import numpy as np
from cachetools import LRUCache, cached
from cachetools.keys import hashkey
from scipy.sparse import csr_matrix

from bionet_simulator.fem.nodal_field import NodalField
from bionet_simulator.geometry.cut_cell import REFERENCE_CORNERS, clip_cell
from bionet_simulator.geometry.grid_topology import classify_nodes
from bionet_simulator.quadrature.cell_blocks import (compute_reference_blocks, reference_basis_gradients,
                                                     reference_basis_values)
from bionet_simulator.quadrature.edge_rule import gauss_legendre_nodes

log = getLogger("geometry")


class CoefficientSampling(Enum):
    CENTROID = 'centroid'
    NODAL_Q5 = 'nodal-q5'

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        for member in cls:
            if member.value == str(name).strip().lower():
                return member
        raise ValueError("Unknown coefficient sampling '%s'" % name)


class FeSpace:
    """
    Continuous bilinear elements on the active lattice nodes.
    Every integral is precomputed per cell on the unit reference cell; full cells share one set of blocks.
    """

    def __init__(self, topology, sampling=CoefficientSampling.CENTROID, rule=None):
        self.__topology = topology
        self.__sampling = CoefficientSampling.from_name(sampling)
        self.__rule = rule if rule is not None else gauss_legendre_nodes(3)
        with_triple = self.__sampling == CoefficientSampling.NODAL_Q5

        n = topology.n
        h = topology.h
        counts = topology.cell_inside_counts().ravel()
        full_blocks = compute_reference_blocks(REFERENCE_CORNERS, self.__rule, with_triple)

        cells = []
        blocks = []
        boundary_cells = []
        boundary_a = []
        boundary_b = []
        for cell in np.flatnonzero(counts > 0):
            cell = int(cell)
            if counts[cell] == 4:
                cells.append(cell)
                blocks.append(full_blocks)
                continue
            polygon = clip_cell(cell, topology)
            if polygon is None:
                continue
            boundary_cells.append(len(cells))
            boundary_a.append(polygon.a)
            boundary_b.append(polygon.b)
            cells.append(cell)
            blocks.append(compute_reference_blocks(polygon.reference_vertices, self.__rule, with_triple))

        self.__cells = np.asarray(cells, dtype=np.int64)
        j, i = np.divmod(self.__cells, n)
        row = n + 1
        corner_ids = np.column_stack((j * row + i, j * row + i + 1, (j + 1) * row + i + 1, (j + 1) * row + i))

        supported = np.zeros(row * row, dtype=bool)
        supported[corner_ids.ravel()] = True
        active = topology.active_mask.ravel()
        if np.any(active & ~supported):
            log.warning("%i active nodes have no supporting cell and are left out",
                        np.count_nonzero(active & ~supported))
        self.__node_ids = np.flatnonzero(supported)
        self.__dof_map = np.full(row * row, -1, dtype=np.int64)
        self.__dof_map[self.__node_ids] = np.arange(len(self.__node_ids))
        self.__cell_dofs = self.__dof_map[corner_ids]

        origins = np.column_stack((i * h, j * h))
        reference_centroids = np.array([b.centroid for b in blocks]).reshape(-1, 2)
        self.__areas = h * h * np.array([b.area for b in blocks])
        self.__centroids = origins + h * reference_centroids
        self.__load_blocks = h * h * np.array([b.load for b in blocks]).reshape(-1, 4)
        self.__mass_blocks = h * h * np.array([b.mass for b in blocks]).reshape(-1, 4, 4)
        self.__gradient_blocks = np.array([b.gradient for b in blocks]).reshape(-1, 2, 2, 4, 4)
        self.__centroid_basis = reference_basis_values(reference_centroids[:, 0], reference_centroids[:, 1])
        self.__centroid_gradients = reference_basis_gradients(reference_centroids[:, 0], reference_centroids[:, 1]) / h
        if with_triple:
            self.__mass3_blocks = h * h * np.array([b.mass3 for b in blocks])
            self.__gradient3_blocks = np.array([b.gradient3 for b in blocks])
        else:
            self.__mass3_blocks = self.__gradient3_blocks = None

        self.__boundary_cells = np.asarray(boundary_cells, dtype=np.int64)
        self.__boundary_a = np.array(boundary_a).reshape(-1, 2)
        self.__boundary_b = np.array(boundary_b).reshape(-1, 2)

        self.__lumped_mass = np.bincount(self.__cell_dofs.ravel(), weights=self.__load_blocks.ravel(),
                                         minlength=self.n_dofs)
        self.__build_scatter_pattern()
        log.info("Finite element space n=%i: %i dofs, %i cells (%i cut), area %.6f",
                 n, self.n_dofs, len(self.__cells), len(self.__boundary_cells), self.__areas.sum())

    def __build_scatter_pattern(self):
        rows = np.repeat(self.__cell_dofs, 4, axis=1).ravel()
        cols = np.tile(self.__cell_dofs, (1, 4)).ravel()
        keys = rows * self.n_dofs + cols
        unique_keys = np.unique(keys)
        self.__scatter_positions = np.searchsorted(unique_keys, keys)
        pattern_rows, pattern_cols = np.divmod(unique_keys, self.n_dofs)
        self.__pattern_indices = pattern_cols
        self.__pattern_indptr = np.concatenate(([0], np.cumsum(np.bincount(pattern_rows, minlength=self.n_dofs))))

    @property
    def topology(self):
        return self.__topology

    @property
    def sampling(self):
        return self.__sampling

    @property
    def rule(self):
        return self.__rule

    @property
    def n(self):
        return self.__topology.n

    @property
    def h(self):
        return self.__topology.h

    @property
    def n_dofs(self):
        return len(self.__node_ids)

    @property
    def n_cells(self):
        return len(self.__cells)

    @property
    def node_ids(self):
        return self.__node_ids

    @property
    def dof_map(self):
        return self.__dof_map

    @property
    def cells(self):
        return self.__cells

    @property
    def cell_dofs(self):
        return self.__cell_dofs

    @property
    def areas(self):
        return self.__areas

    @property
    def centroids(self):
        return self.__centroids

    @property
    def load_blocks(self):
        return self.__load_blocks

    @property
    def mass_blocks(self):
        return self.__mass_blocks

    @property
    def gradient_blocks(self):
        return self.__gradient_blocks

    @property
    def mass3_blocks(self):
        return self.__mass3_blocks

    @property
    def gradient3_blocks(self):
        return self.__gradient3_blocks

    @property
    def centroid_basis(self):
        return self.__centroid_basis

    @property
    def centroid_gradients(self):
        return self.__centroid_gradients

    @property
    def boundary_cells(self):
        return self.__boundary_cells

    @property
    def boundary_segments(self):
        return self.__boundary_a, self.__boundary_b

    @property
    def lumped_mass(self):
        return self.__lumped_mass

    @property
    def area(self):
        return float(self.__areas.sum())

    def node_coordinates(self):
        return self.__topology.node_coordinates(self.__node_ids)

    def node_classes(self):
        return self.__topology.node_classes.ravel()[self.__node_ids]

    def scatter_matrix(self, local_blocks):
        """Sums (n_cells, 4, 4) element blocks into a CSR matrix in a fixed order."""
        data = np.bincount(self.__scatter_positions, weights=np.asarray(local_blocks).ravel(),
                           minlength=len(self.__pattern_indices))
        return csr_matrix((data, self.__pattern_indices.copy(), self.__pattern_indptr.copy()),
                          shape=(self.n_dofs, self.n_dofs))

    def scatter_vector(self, local_vectors):
        return np.bincount(self.__cell_dofs.ravel(), weights=np.asarray(local_vectors).ravel(),
                           minlength=self.n_dofs)

    def cell_values(self, values):
        """Interpolated values at the cell centroids, (n_cells,) or (n_cells, components)."""
        values = np.asarray(values, dtype=float)
        return np.einsum('ck,ck...->c...', self.__centroid_basis, values[self.__cell_dofs])

    def cell_gradients(self, values):
        """Gradient of a scalar nodal vector at the cell centroids, shape (n_cells, 2)."""
        values = np.asarray(values, dtype=float)
        return np.einsum('ckd,ck->cd', self.__centroid_gradients, values[self.__cell_dofs])

    def interpolate(self, f):
        coordinates = self.node_coordinates()
        return np.asarray(f(coordinates[:, 0], coordinates[:, 1]), dtype=float)

    def nodal_to_grid(self, values):
        grid = np.full((self.n + 1) ** 2, np.nan)
        grid[self.__node_ids] = values
        return grid.reshape(self.n + 1, self.n + 1)

    def mean(self, values):
        return float(np.dot(self.__lumped_mass, values) / self.__lumped_mass.sum())


def _space_key(level_set, n, zeta=1.0, alpha=2.0, sampling=CoefficientSampling.CENTROID):
    return hashkey(level_set.describe(), n, zeta, alpha, CoefficientSampling.from_name(sampling).value)


@cached(LRUCache(maxsize=8), key=_space_key)
def build_space(level_set, n, zeta=1.0, alpha=2.0, sampling=CoefficientSampling.CENTROID):
    topology = classify_nodes(level_set, n, zeta=zeta, alpha=alpha)
    return FeSpace(topology, sampling=sampling)


def interpolate(space, f, label='C'):
    return NodalField.scalar(space.interpolate(f), label)


def lumped_mass(space):
    return space.lumped_mass


def l2_norm(space, values, mass=None):
    """Discrete L2 norm sqrt(u^T M u) with the unit mass matrix of the space."""
    if mass is None:
        from bionet_simulator.fem.assembler import assemble_mass
        mass = assemble_mass(space)
    values = np.asarray(getattr(values, 'values', values), dtype=float)
    if values.ndim == 2:
        return float(np.sqrt(sum(values[:, k] @ (mass @ values[:, k]) for k in range(values.shape[1]))))
    return float(np.sqrt(values @ (mass @ values)))


def nodal_to_grid(space, values):
    values = np.asarray(getattr(values, 'values', values), dtype=float)
    if values.ndim == 2:
        values = values[:, 0]
    return space.nodal_to_grid(values)
