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

from logging import getLogger

import numpy as np
from scipy import ndimage

log = getLogger("analysis")


class ContourCell:
    def __init__(self, i, j, segments):
        self.i = i
        self.j = j
        self.segments = segments

    @property
    def cell(self):
        return self.i, self.j

    def __repr__(self):
        return "ContourCell(%i, %i, segments=%i)" % (self.i, self.j, len(self.segments))


def _crossing(points, values, level, r):
    s = (r + 1) % 4
    theta = (level - values[r]) / (values[s] - values[r])
    return tuple(points[r] + theta * (points[s] - points[r]))


def contour_cells(snapshot, level, label=None):
    """
    Marching squares over the lattice cells whose four corners are active.
    A corner is above when its value exceeds the level; saddles are split by the mean of the corners.
    """
    grid = snapshot.grid(label)
    n = snapshot.n
    h = 1.0 / n
    corners = np.stack((grid[:-1, :-1], grid[:-1, 1:], grid[1:, 1:], grid[1:, :-1]), axis=-1)
    complete = np.all(np.isfinite(corners), axis=-1)
    above = corners > level
    mixed = complete & np.any(above, axis=-1) & ~np.all(above, axis=-1)

    cells = []
    for j, i in zip(*np.nonzero(mixed)):
        values = corners[j, i]
        flags = above[j, i]
        points = np.array(((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)), dtype=float) * h
        crossings = [r for r in range(4) if flags[r] != flags[(r + 1) % 4]]
        if len(crossings) == 2:
            pairs = [tuple(crossings)]
        elif (values.mean() > level) == flags[0]:
            # corners 0 and 2 are joined through the center, 1 and 3 are cut off
            pairs = [(0, 1), (2, 3)]
        else:
            pairs = [(3, 0), (1, 2)]
        segments = [(_crossing(points, values, level, a), _crossing(points, values, level, b)) for a, b in pairs]
        cells.append(ContourCell(int(i), int(j), segments))
    log.debug("Level %.6g crosses %i cells", level, len(cells))
    return cells


def count_branches(snapshot, threshold, label=None):
    """Number of 8-connected components of the active nodes where the field exceeds threshold."""
    grid = snapshot.grid(label)
    mask = np.nan_to_num(grid, nan=-np.inf) > threshold
    _, count = ndimage.label(mask, structure=np.ones((3, 3), dtype=bool))
    return int(count)
