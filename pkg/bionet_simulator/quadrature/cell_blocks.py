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

from itertools import combinations_with_replacement, product

import numpy as np

from bionet_simulator.quadrature.bi_polynomial import BiPolynomial
from bionet_simulator.quadrature.edge_rule import gauss_legendre_nodes
from bionet_simulator.quadrature.polygon_integrator import PolygonIntegrator, integrate_polygon

# Bilinear basis of the unit cell, numbered counterclockwise from the lower left corner.
REFERENCE_BASIS = (
    BiPolynomial.from_factors((1.0, -1.0), (1.0, -1.0)),
    BiPolynomial.from_factors((0.0, 1.0), (1.0, -1.0)),
    BiPolynomial.from_factors((0.0, 1.0), (0.0, 1.0)),
    BiPolynomial.from_factors((1.0, -1.0), (0.0, 1.0)),
)
REFERENCE_GRADIENTS = tuple((phi.derivative_x(), phi.derivative_y()) for phi in REFERENCE_BASIS)

_PAIRS = tuple(combinations_with_replacement(range(4), 2))
_ALL_PAIRS = tuple(product(range(4), range(4)))
_DIRECTIONS = tuple(product(range(2), range(2)))
_X, _Y = 0, 1


def _standard_family():
    functions = [BiPolynomial.constant(1.0), BiPolynomial.monomial(1, 0), BiPolynomial.monomial(0, 1)]
    functions += list(REFERENCE_BASIS)
    functions += [REFERENCE_BASIS[i] * REFERENCE_BASIS[j] for i, j in _PAIRS]
    functions += [REFERENCE_GRADIENTS[i][_X] * REFERENCE_GRADIENTS[j][_X] for i, j in _PAIRS]
    functions += [REFERENCE_GRADIENTS[i][_Y] * REFERENCE_GRADIENTS[j][_Y] for i, j in _PAIRS]
    functions += [REFERENCE_GRADIENTS[i][_X] * REFERENCE_GRADIENTS[j][_Y] for i, j in _ALL_PAIRS]
    return functions


def _triple_family():
    functions = []
    for k in range(4):
        weight = REFERENCE_BASIS[k]
        functions += [weight * REFERENCE_BASIS[i] * REFERENCE_BASIS[j] for i, j in _PAIRS]
        functions += [weight * REFERENCE_GRADIENTS[i][_X] * REFERENCE_GRADIENTS[j][_X] for i, j in _PAIRS]
        functions += [weight * REFERENCE_GRADIENTS[i][_Y] * REFERENCE_GRADIENTS[j][_Y] for i, j in _PAIRS]
        functions += [weight * REFERENCE_GRADIENTS[i][_X] * REFERENCE_GRADIENTS[j][_Y] for i, j in _ALL_PAIRS]
    return functions


_STANDARD = PolygonIntegrator(_standard_family())
_TRIPLE = PolygonIntegrator(_triple_family())


def _symmetric_block(values):
    block = np.empty((4, 4))
    for value, (i, j) in zip(values, _PAIRS):
        block[i, j] = value
        block[j, i] = value
    return block


def _gradient_blocks(xx, yy, xy):
    """Stacks G[a, b, i, j] = integral of d_a phi_i * d_b phi_j, with G[y, x] the exact transpose of G[x, y]."""
    gradient = np.empty((2, 2, 4, 4))
    gradient[_X, _X] = _symmetric_block(xx)
    gradient[_Y, _Y] = _symmetric_block(yy)
    gradient[_X, _Y] = np.asarray(xy).reshape(4, 4)
    gradient[_Y, _X] = gradient[_X, _Y].T
    return gradient


class ReferenceBlocks:
    """Element integrals of one polygon mapped to the unit reference cell."""

    def __init__(self, area, centroid, load, mass, gradient, mass3=None, gradient3=None):
        self.area = area
        self.centroid = centroid
        self.load = load
        self.mass = mass
        self.gradient = gradient
        self.mass3 = mass3
        self.gradient3 = gradient3


def compute_reference_blocks(reference_vertices, rule, with_triple=False):
    values = _STANDARD.integrate(reference_vertices, rule)
    area = float(values[0])
    centroid = values[1:3] / area
    load = values[3:7].copy()
    offset = 7
    mass = _symmetric_block(values[offset:offset + 10])
    offset += 10
    xx = values[offset:offset + 10]
    yy = values[offset + 10:offset + 20]
    xy = values[offset + 20:offset + 36]
    gradient = _gradient_blocks(xx, yy, xy)

    mass3 = gradient3 = None
    if with_triple:
        triple = _TRIPLE.integrate(reference_vertices, gauss_legendre_nodes(5)).reshape(4, 46)
        mass3 = np.stack([_symmetric_block(row[:10]) for row in triple])
        gradient3 = np.stack([_gradient_blocks(row[10:20], row[20:30], row[30:46]) for row in triple], axis=2)
    return ReferenceBlocks(area, centroid, load, mass, gradient, mass3, gradient3)


def reference_basis_values(xi, eta):
    """Values of the four bilinear functions at reference points, shape (..., 4)."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    return np.stack(((1 - xi) * (1 - eta), xi * (1 - eta), xi * eta, (1 - xi) * eta), axis=-1)


def reference_basis_gradients(xi, eta):
    """Reference gradients of the four bilinear functions, shape (..., 4, 2)."""
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    dx = np.stack((-(1 - eta), 1 - eta, eta, -eta), axis=-1)
    dy = np.stack((-(1 - xi), -xi, xi, 1 - xi), axis=-1)
    return np.stack((dx, dy), axis=-1)


def local_mass_block(i, j, polygon, rule):
    h = polygon.h
    return h * h * integrate_polygon(REFERENCE_BASIS[i] * REFERENCE_BASIS[j], polygon.reference_vertices, rule)


def local_stiffness_block(i, j, tensor, polygon, rule):
    tensor = np.asarray(tensor, dtype=float)
    total = 0.0
    for a, b in _DIRECTIONS:
        if tensor[a, b] == 0.0:
            continue
        integrand = REFERENCE_GRADIENTS[i][a] * REFERENCE_GRADIENTS[j][b]
        total += tensor[a, b] * integrate_polygon(integrand, polygon.reference_vertices, rule)
    return total


def local_load_block(i, polygon, rule, value=1.0):
    h = polygon.h
    return value * h * h * integrate_polygon(REFERENCE_BASIS[i], polygon.reference_vertices, rule)
