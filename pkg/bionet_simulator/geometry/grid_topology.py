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
from scipy import ndimage

from bionet_simulator.bn_utility.bn_errors import EmptyDomainError
from bionet_simulator.geometry.level_set import eval_level_set_grid

log = getLogger("geometry")

SNAP_EPS = float(np.finfo(float).eps)


class NodeClass(Enum):
    INACTIVE = 0
    INTERNAL = 1
    GHOST = 2

    @property
    def label(self):
        return self.name.lower()


def snap_to_grid(values, h, zeta=1.0, alpha=2.0):
    """Moves inside values closer than zeta * h**alpha to the boundary just outside of it."""
    snapped = np.array(values, dtype=float, copy=True)
    threshold = zeta * h ** alpha
    near = (snapped < 0) & (-snapped < threshold)
    snapped[near] = SNAP_EPS
    return snapped


class GridTopology:
    """
    Node classification of the uniform lattice over the unit square.
    Arrays are indexed [j, i] for the node at (i*h, j*h); flat node ids are row-major, j * (n + 1) + i.
    Cell (i, j) has ids j * n + i and corners k0=(i,j), k1=(i+1,j), k2=(i+1,j+1), k3=(i,j+1).
    """

    def __init__(self, n, level_set_values, zeta=1.0, alpha=2.0):
        self.__n = int(n)
        self.__h = 1.0 / self.__n
        self.__zeta = zeta
        self.__alpha = alpha
        self.__values = snap_to_grid(level_set_values, self.__h, zeta, alpha)

        internal = self.__values < 0
        if not internal.any():
            raise EmptyDomainError("No internal nodes for n=%i, the domain is empty at this resolution" % self.__n)
        neighbourhood = ndimage.binary_dilation(internal, structure=np.ones((3, 3), dtype=bool))
        ghost = neighbourhood & ~internal

        self.__classes = np.full(internal.shape, NodeClass.INACTIVE.value, dtype=np.int8)
        self.__classes[internal] = NodeClass.INTERNAL.value
        self.__classes[ghost] = NodeClass.GHOST.value
        log.debug("Classified lattice n=%i: %i internal, %i ghost nodes", self.__n, internal.sum(), ghost.sum())

    @property
    def n(self):
        return self.__n

    @property
    def h(self):
        return self.__h

    @property
    def zeta(self):
        return self.__zeta

    @property
    def alpha(self):
        return self.__alpha

    @property
    def level_set_values(self):
        return self.__values

    @property
    def node_classes(self):
        return self.__classes

    @property
    def internal_mask(self):
        return self.__classes == NodeClass.INTERNAL.value

    @property
    def ghost_mask(self):
        return self.__classes == NodeClass.GHOST.value

    @property
    def active_mask(self):
        return self.__classes != NodeClass.INACTIVE.value

    def node_class(self, i, j):
        return NodeClass(int(self.__classes[j, i]))

    def node_xy(self, node_id):
        j, i = divmod(int(node_id), self.__n + 1)
        return i / self.__n, j / self.__n

    def node_coordinates(self, node_ids):
        j, i = np.divmod(np.asarray(node_ids), self.__n + 1)
        return np.column_stack((i / self.__n, j / self.__n))

    def cell_corner_ids(self, cell_id):
        j, i = divmod(int(cell_id), self.__n)
        row = self.__n + 1
        return (j * row + i, j * row + i + 1, (j + 1) * row + i + 1, (j + 1) * row + i)

    def cell_corner_values(self, cell_id):
        j, i = divmod(int(cell_id), self.__n)
        v = self.__values
        return np.array((v[j, i], v[j, i + 1], v[j + 1, i + 1], v[j + 1, i]))

    def cell_origin(self, cell_id):
        j, i = divmod(int(cell_id), self.__n)
        return np.array((i / self.__n, j / self.__n))

    def cell_inside_counts(self):
        """Number of internal corners per cell, shape (n, n) indexed [j, i]."""
        inside = self.internal_mask.astype(np.int8)
        return inside[:-1, :-1] + inside[:-1, 1:] + inside[1:, 1:] + inside[1:, :-1]


def classify_nodes(level_set, n, zeta=1.0, alpha=2.0):
    if n < 2:
        raise ValueError("Lattice resolution must be at least 2, got %r" % n)
    return GridTopology(n, eval_level_set_grid(level_set, n), zeta=zeta, alpha=alpha)
