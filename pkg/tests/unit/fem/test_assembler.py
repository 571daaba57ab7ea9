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

import unittest

import numpy as np

from bionet_simulator.fem.assembler import assemble_boundary_flux, assemble_load, assemble_stiffness, cell_gradient, \
    sample_cells
from bionet_simulator.fem.fe_space import build_space
from bionet_simulator.fem.nodal_field import NodalField
from bionet_simulator.geometry.level_set import LevelSet
from tests.unit.BaseUnitTest import BaseUnitTest


class AssemblerTests(BaseUnitTest):

    @classmethod
    def setUpClass(cls):
        cls.space = build_space(LevelSet.leaf(), 24)

    def test_sample_cells(self):
        space = self.space
        self.assertTrue(np.array_equal(np.ones(space.n_cells), sample_cells(space, None)))
        self.assertTrue(np.array_equal(np.full(space.n_cells, 2.5), sample_cells(space, 2.5)))
        self.assertTrue(np.allclose(space.centroids[:, 0], sample_cells(space, lambda x, y: x)))
        field = NodalField.isotropic(space.n_dofs, 3.0)
        self.assertTrue(np.allclose([3.0, 0.0, 3.0], sample_cells(space, field)))
        with self.assertRaises(ValueError):
            sample_cells(space, np.ones(space.n_cells + 1))

    def test_constant_load_is_lumped_mass(self):
        load = assemble_load(self.space, 1.0)
        self.assertTrue(np.allclose(self.space.lumped_mass, load, atol=1e-16))
        self.assertAlmostEqual(self.space.area, float(load.sum()), places=13)

    def test_boundary_flux_divergence_theorem(self):
        space = self.space
        radial = assemble_boundary_flux(space, lambda x, y: (x, y))
        self.assertAlmostEqual(2.0 * space.area, float(radial.sum()), places=12)
        uniform = assemble_boundary_flux(space, lambda x, y: (np.ones_like(x), np.zeros_like(y)))
        self.assertAlmostEqual(0.0, float(uniform.sum()), places=13)

    def test_boundary_flux_touches_only_boundary_nodes(self):
        space = self.space
        flux = assemble_boundary_flux(space, lambda x, y: (x, y))
        boundary_dofs = np.unique(space.cell_dofs[space.boundary_cells])
        outside = np.setdiff1d(np.arange(space.n_dofs), boundary_dofs)
        self.assertTrue(np.all(flux[outside] == 0.0))

    def test_anisotropic_stiffness(self):
        space = self.space
        tensor = np.tile([2.0, 0.5, 1.0], (space.n_cells, 1))
        stiffness = assemble_stiffness(space, tensor)
        u = space.interpolate(lambda x, y: x + 2.0 * y)
        # grad u . C grad u = 2 + 2 * 0.5 * 2 + 1 * 4 over the discrete domain
        self.assertAlmostEqual(8.0 * space.area, float(u @ (stiffness @ u)), places=11)
        self.assertEqual(0.0, abs(stiffness - stiffness.T).max())

    def test_stiffness_is_positive_semidefinite(self):
        space = self.space
        generator = np.random.default_rng(3)
        tensor = np.tile([2.0, 0.5, 1.0], (space.n_cells, 1))
        for coefficient in (None, tensor):
            stiffness = assemble_stiffness(space, coefficient)
            for _ in range(20):
                v = generator.standard_normal(space.n_dofs)
                self.assertGreaterEqual(float(v @ (stiffness @ v)), -1e-12 * float(v @ v))

    def test_linear_patch_reproduces_boundary_flux(self):
        # for linear u the weak Laplacian is the boundary flux of its constant gradient
        space = self.space
        u = space.interpolate(lambda x, y: 0.7 + 2.0 * x - 3.0 * y)
        flux = assemble_boundary_flux(space, lambda x, y: (np.full_like(x, 2.0), np.full_like(y, -3.0)))
        self.assertAllClose(assemble_stiffness(space) @ u, flux, atol=1e-11)

    def test_indefinite_coefficient_is_reported(self):
        with self.assertLogs('solver', level='WARNING'):
            assemble_stiffness(self.space, -1.0)

    def test_cell_gradient(self):
        u = self.space.interpolate(lambda x, y: 2.0 * x + 3.0 * y)
        self.assertTrue(np.allclose([2.0, 3.0], cell_gradient(self.space, u, 0), atol=1e-11))
        self.assertTrue(np.allclose([2.0, 3.0], cell_gradient(self.space, NodalField.scalar(u), 5), atol=1e-11))


if __name__ == '__main__':
    unittest.main()
