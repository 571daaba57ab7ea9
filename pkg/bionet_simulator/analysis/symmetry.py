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

AXIS_X = 'x'
AXIS_Y = 'y'
AXIS_DIAGONAL = 'diagonal'

_AXIS_ALIASES = {
    'x': AXIS_X, 'x=1/2': AXIS_X, 'x=0.5': AXIS_X,
    'y': AXIS_Y, 'y=1/2': AXIS_Y, 'y=0.5': AXIS_Y,
    'diagonal': AXIS_DIAGONAL, 'y=x': AXIS_DIAGONAL,
}


def normalize_axis(axis):
    try:
        return _AXIS_ALIASES[str(axis).strip().lower().replace(' ', '')]
    except KeyError:
        raise AnalysisError("Reflection axis '%s' is not aligned with the grid" % axis)


def reflect_grid(grid, axis):
    axis = normalize_axis(axis)
    if axis == AXIS_X:
        return grid[:, ::-1]
    if axis == AXIS_Y:
        return grid[::-1, :]
    return grid.T


def reflection_residual(grid, reflected):
    """Max |difference| over nodes active in both grids, 0 when they share none."""
    both = np.isfinite(grid) & np.isfinite(reflected)
    if not both.any():
        return 0.0
    return float(np.max(np.abs(grid[both] - reflected[both])))


def symmetry_residual(snapshot, axis, label=None):
    """
    Largest deviation of a field from its mirror image. Without a label the conductivity is used;
    tensors reflect componentwise (C12 changes sign across x=1/2 and y=1/2, C11 and C22 swap across y=x).
    """
    axis = normalize_axis(axis)
    if label is not None and not (label == 'C' and snapshot.is_tensor):
        grid = snapshot.grid(label)
        return reflection_residual(grid, reflect_grid(grid, axis))

    if not snapshot.is_tensor:
        grid = snapshot.grid('C')
        return reflection_residual(grid, reflect_grid(grid, axis))

    c11, c12, c22 = (snapshot.grid(values=snapshot.field(name)) for name in ('C11', 'C12', 'C22'))
    if axis == AXIS_DIAGONAL:
        pairs = ((c11, reflect_grid(c22, axis)), (c12, reflect_grid(c12, axis)), (c22, reflect_grid(c11, axis)))
    else:
        pairs = ((c11, reflect_grid(c11, axis)), (c12, -reflect_grid(c12, axis)), (c22, reflect_grid(c22, axis)))
    return max(reflection_residual(grid, reflected) for grid, reflected in pairs)
