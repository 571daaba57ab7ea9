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
from numbers import Number

import numpy as np

from bionet_simulator.fem.fe_space import CoefficientSampling
from bionet_simulator.fem.nodal_field import NodalField, min_eigenvalues
from bionet_simulator.quadrature.cell_blocks import reference_basis_values

log = getLogger("solver")

NEGATIVE_EIGENVALUE_TOLERANCE = -1e-12


def _uses_nodal_blocks(space, coefficient):
    return isinstance(coefficient, NodalField) and space.sampling == CoefficientSampling.NODAL_Q5


def sample_cells(space, coefficient):
    """
    Per-cell values of a coefficient given as a number, a callable of (x, y) sampled at
    cell centroids, an array with one entry per cell or a NodalField interpolated at centroids.
    """
    if coefficient is None:
        return np.ones(space.n_cells)
    if isinstance(coefficient, Number):
        return np.full(space.n_cells, float(coefficient))
    if isinstance(coefficient, NodalField):
        values = space.cell_values(coefficient.values)
        return values[:, 0] if coefficient.components == 1 else values
    if callable(coefficient):
        centroids = space.centroids
        return np.asarray(coefficient(centroids[:, 0], centroids[:, 1]), dtype=float)
    values = np.asarray(coefficient, dtype=float)
    if values.shape[0] != space.n_cells:
        raise ValueError("Expected %i per-cell values, got %i" % (space.n_cells, values.shape[0]))
    return values


def _as_tensors(values):
    """Per-cell coefficient as (n_cells, 3) stored entries m11, m12, m22."""
    values = np.asarray(values, dtype=float)
    if values.ndim == 1:
        return np.column_stack((values, np.zeros_like(values), values))
    if values.ndim == 2 and values.shape[1] == 1:
        return _as_tensors(values[:, 0])
    if values.ndim == 3:
        return np.column_stack((values[:, 0, 0], values[:, 0, 1], values[:, 1, 1]))
    return values


def _warn_indefinite(tensors):
    eigenvalues = min_eigenvalues(tensors)
    negative = np.count_nonzero(eigenvalues < NEGATIVE_EIGENVALUE_TOLERANCE)
    if negative:
        log.warning("Stiffness coefficient is indefinite in %i places (min eigenvalue %.3e)",
                    negative, float(eigenvalues.min()))


def assemble_mass(space, coefficient=None):
    if _uses_nodal_blocks(space, coefficient):
        nodal = coefficient.values[:, 0][space.cell_dofs]
        local = np.einsum('ck,ckij->cij', nodal, space.mass3_blocks)
    else:
        local = sample_cells(space, coefficient)[:, None, None] * space.mass_blocks
    return space.scatter_matrix(local)


def assemble_stiffness(space, coefficient=None):
    gradients = space.gradient_blocks
    if _uses_nodal_blocks(space, coefficient):
        tensors = _as_tensors(coefficient.values)
        _warn_indefinite(tensors)
        nodal = tensors[space.cell_dofs]
        g3 = space.gradient3_blocks
        local = (np.einsum('ck,ckij->cij', nodal[:, :, 0], g3[:, 0, 0])
                 + np.einsum('ck,ckij->cij', nodal[:, :, 1], g3[:, 0, 1] + g3[:, 1, 0])
                 + np.einsum('ck,ckij->cij', nodal[:, :, 2], g3[:, 1, 1]))
    else:
        tensors = _as_tensors(sample_cells(space, coefficient))
        _warn_indefinite(tensors)
        local = (tensors[:, 0, None, None] * gradients[:, 0, 0]
                 + tensors[:, 1, None, None] * (gradients[:, 0, 1] + gradients[:, 1, 0])
                 + tensors[:, 2, None, None] * gradients[:, 1, 1])
    return space.scatter_matrix(local)


def assemble_load(space, source):
    if _uses_nodal_blocks(space, source):
        nodal = source.values[:, 0][space.cell_dofs]
        local = np.einsum('ck,cki->ci', nodal, space.mass_blocks)
    else:
        local = sample_cells(space, source)[:, None] * space.load_blocks
    return space.scatter_vector(local)


def assemble_boundary_flux(space, flux, rule=None):
    """
    Load from a prescribed flux vector field q across the discrete boundary:
    b_i = integral over the boundary segments of (q . n) phi_i.
    """
    rule = rule if rule is not None else space.rule
    start, end = space.boundary_segments
    if not len(start):
        return np.zeros(space.n_dofs)
    tangent = end - start
    # counterclockwise orientation, so the outward normal times length is (dy, -dx)
    normal_length = np.column_stack((tangent[:, 1], -tangent[:, 0]))
    points = start[:, None, :] + rule.nodes[None, :, None] * tangent[:, None, :]
    qx, qy = flux(points[..., 0], points[..., 1])
    normal_flux = qx * normal_length[:, None, 0] + qy * normal_length[:, None, 1]

    h = space.h
    j, i = np.divmod(space.cells[space.boundary_cells], space.n)
    basis = reference_basis_values(points[..., 0] / h - i[:, None], points[..., 1] / h - j[:, None])
    local = np.einsum('sq,q,sqk->sk', normal_flux, rule.weights, basis)
    return np.bincount(space.cell_dofs[space.boundary_cells].ravel(), weights=local.ravel(),
                       minlength=space.n_dofs)


def cell_gradient(space, values, cell):
    """Gradient of the interpolant on one cell (index into space.cells) at its centroid."""
    values = np.asarray(getattr(values, 'values', values), dtype=float)
    if values.ndim == 2:
        values = values[:, 0]
    return space.centroid_gradients[cell].T @ values[space.cell_dofs[cell]]
