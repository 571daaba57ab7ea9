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

from bionet_simulator.quadrature.bi_polynomial import BiPolynomial

# The integral over a polygon P of f is the boundary integral of F dy, F being
# the x-antiderivative of f. Each straight edge is parametrized on [0, 1] and
# integrated with the one-dimensional rule.


def _vertices_of(polygon):
    return np.asarray(getattr(polygon, 'vertices', polygon), dtype=float)


def edge_points(vertices, rule):
    """Quadrature points on every edge (m, q) and the y-increment of each edge."""
    vertices = _vertices_of(vertices)
    start = vertices
    end = np.roll(vertices, -1, axis=0)
    nodes = rule.nodes[None, :]
    xs = start[:, 0:1] + nodes * (end[:, 0:1] - start[:, 0:1])
    ys = start[:, 1:2] + nodes * (end[:, 1:2] - start[:, 1:2])
    return xs, ys, end[:, 1] - start[:, 1]


class PolygonIntegrator:
    """Integrates a fixed family of polynomials over arbitrary polygons at once."""

    def __init__(self, functions):
        antiderivatives = [f.antiderivative_x().coefficients for f in functions]
        rows = max(c.shape[0] for c in antiderivatives)
        cols = max(c.shape[1] for c in antiderivatives)
        self.__stack = np.zeros((len(antiderivatives), rows, cols))
        for k, coefficients in enumerate(antiderivatives):
            self.__stack[k, :coefficients.shape[0], :coefficients.shape[1]] = coefficients

    @property
    def size(self):
        return self.__stack.shape[0]

    def integrate(self, polygon, rule):
        xs, ys, dy = edge_points(polygon, rule)
        m, q = xs.shape
        powers_x = np.vander(xs.ravel(), self.__stack.shape[1], increasing=True)
        powers_y = np.vander(ys.ravel(), self.__stack.shape[2], increasing=True)
        values = np.einsum('pa,kab,pb->kp', powers_x, self.__stack, powers_y).reshape(-1, m, q)
        return np.einsum('kmq,q,m->k', values, rule.weights, dy)


def integrate_polygon_many(functions, polygon, rule):
    return PolygonIntegrator(functions).integrate(polygon, rule)


def integrate_polygon(f, polygon, rule):
    return float(integrate_polygon_many([f], polygon, rule)[0])


_MOMENTS = PolygonIntegrator((BiPolynomial.constant(1.0), BiPolynomial.monomial(1, 0), BiPolynomial.monomial(0, 1)))


def polygon_moments(polygon, rule):
    area, mx, my = _MOMENTS.integrate(polygon, rule)
    return float(area), np.array((mx / area, my / area)) if area > 0 else np.full(2, np.nan)


def polygon_area(polygon, rule):
    return polygon_moments(polygon, rule)[0]


def polygon_centroid(polygon, rule):
    return polygon_moments(polygon, rule)[1]
