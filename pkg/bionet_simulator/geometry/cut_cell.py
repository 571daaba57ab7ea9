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

from bionet_simulator.bn_utility.bn_errors import CutCellError

log = getLogger("geometry")

REFERENCE_CORNERS = np.array(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))
DUPLICATE_TOLERANCE = 1e-13


def edge_intersections(corner_values, corners=REFERENCE_CORNERS):
    """
    Crossing points of the zero level on the boundary of a cut cell.
    A is taken on the edge leaving an inside corner, B on the edge entering one (counterclockwise walk).
    """
    values = np.asarray(corner_values, dtype=float)
    corners = np.asarray(corners, dtype=float)
    inside = values < 0
    points = {}
    for r in range(4):
        s = (r + 1) % 4
        if inside[r] == inside[s]:
            continue
        theta = values[r] / (values[r] - values[s])
        point = theta * corners[s] + (1.0 - theta) * corners[r]
        label = 'A' if inside[r] else 'B'
        if label in points:
            raise CutCellError("Cell has more than two boundary crossings")
        points[label] = point
    if len(points) != 2:
        raise CutCellError("Cell is not cut by the boundary, found %i crossings" % len(points))
    return points['A'], points['B']


def polygon_signed_area(vertices):
    x = vertices[:, 0]
    y = vertices[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


class CutCellPolygon:
    """Intersection of a lattice cell with the discrete domain, vertices counterclockwise."""

    def __init__(self, cell, origin, h, reference_vertices, a=None, b=None):
        self.__cell = int(cell)
        self.__origin = np.asarray(origin, dtype=float)
        self.__h = float(h)
        self.__reference_vertices = np.asarray(reference_vertices, dtype=float)
        self.__reference_a = None if a is None else np.asarray(a, dtype=float)
        self.__reference_b = None if b is None else np.asarray(b, dtype=float)

    @property
    def cell(self):
        return self.__cell

    @property
    def origin(self):
        return self.__origin

    @property
    def h(self):
        return self.__h

    @property
    def m(self):
        return len(self.__reference_vertices)

    @property
    def is_full(self):
        return self.__reference_a is None

    @property
    def reference_vertices(self):
        return self.__reference_vertices

    @property
    def vertices(self):
        return self.__origin + self.__h * self.__reference_vertices

    @property
    def a(self):
        return None if self.__reference_a is None else self.__origin + self.__h * self.__reference_a

    @property
    def b(self):
        return None if self.__reference_b is None else self.__origin + self.__h * self.__reference_b

    @property
    def edges(self):
        vertices = self.vertices
        return [(vertices[r], vertices[(r + 1) % len(vertices)]) for r in range(len(vertices))]

    @property
    def area(self):
        return self.__h * self.__h * polygon_signed_area(self.__reference_vertices)

    def __repr__(self):
        return "CutCellPolygon(cell=%i, m=%i, area=%.3e)" % (self.__cell, self.m, self.area)


def clip_reference_cell(corner_values):
    """Returns (vertices, a, b) of the inside part of the unit cell, or None when it is empty or degenerate."""
    values = np.asarray(corner_values, dtype=float)
    inside = values < 0
    if not inside.any():
        return None
    if inside.all():
        return REFERENCE_CORNERS.copy(), None, None

    transitions = int(np.count_nonzero(inside != np.roll(inside, -1)))
    if transitions != 2:
        raise CutCellError("Ambiguous cut cell with %i boundary crossings" % transitions)

    a, b = edge_intersections(values)
    vertices = []
    for r in range(4):
        s = (r + 1) % 4
        if inside[r]:
            vertices.append(REFERENCE_CORNERS[r])
        if inside[r] != inside[s]:
            vertices.append(a if inside[r] else b)

    unique = []
    for vertex in vertices:
        if not unique or np.max(np.abs(vertex - unique[-1])) > DUPLICATE_TOLERANCE:
            unique.append(vertex)
    if len(unique) > 1 and np.max(np.abs(unique[0] - unique[-1])) <= DUPLICATE_TOLERANCE:
        unique.pop()
    if len(unique) < 3:
        return None
    polygon = np.array(unique)
    if polygon_signed_area(polygon) <= 0.0:
        return None
    return polygon, a, b


def clip_cell(cell, topology):
    values = topology.cell_corner_values(cell)
    try:
        clipped = clip_reference_cell(values)
    except CutCellError as e:
        raise CutCellError("%s in cell %i" % (e, cell), cell=cell) from e
    if clipped is None:
        return None
    vertices, a, b = clipped
    return CutCellPolygon(cell, topology.cell_origin(cell), topology.h, vertices, a, b)


def build_cut_cells(topology):
    """Polygons of all cells with at least one internal corner, in row-major cell order."""
    counts = topology.cell_inside_counts().ravel()
    polygons = []
    for cell in np.flatnonzero(counts > 0):
        polygon = clip_cell(int(cell), topology)
        if polygon is not None:
            polygons.append(polygon)
    log.debug("Built %i cell polygons for n=%i", len(polygons), topology.n)
    return polygons
