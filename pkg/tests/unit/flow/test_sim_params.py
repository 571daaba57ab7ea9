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

from bionet_simulator.fem.fe_space import CoefficientSampling
from bionet_simulator.flow.sim_params import SimParams, gaussian_source, rescale_time, scale_parameters
from bionet_simulator.geometry.level_set import DomainType
from tests.unit.BaseUnitTest import BaseUnitTest


class SimParamsTests(BaseUnitTest):

    def test_scaling(self):
        self.assertEqual((4.0, 3.0), scale_parameters(8.0, 2.0, 12.0))
        self.assertEqual(12.0, rescale_time(3.0, 2.0))
        with self.assertRaises(ValueError):
            scale_parameters(1.0, 0.0, 1.0)

    def test_defaults(self):
        params = SimParams()
        self.assertEqual(100, params.n)
        self.assertEqual(0.75, params.gamma)
        self.assertEqual(DomainType.CIRCLE, params.domain)
        self.assertEqual((0.5, 0.5), (params.source_x, params.source_y))
        self.assertEqual(CoefficientSampling.CENTROID, params.coeff_sampling)
        self.assertTrue(params.tensor_mode)

    def test_leaf_source_default(self):
        params = SimParams(domain='leaf')
        self.assertEqual((0.5, 0.2), (params.source_x, params.source_y))
        moved = SimParams(domain='leaf', source_x=0.3, source_y=0.6)
        self.assertEqual((0.3, 0.6), (moved.source_x, moved.source_y))

    def test_time_step_and_steps(self):
        params = SimParams(n=10, t_final=1.0)
        self.assertEqual(0.1, params.time_step)
        self.assertEqual(10, params.steps)
        self.assertEqual(10, SimParams(n=10, t_final=0.95).steps)
        self.assertEqual(0, SimParams(n=10, t_final=0.0).steps)
        self.assertEqual(4, SimParams(n=10, t_final=1.0, dt=0.25).steps)

    def test_invalid_values(self):
        for changes in ({'gamma': 2.0}, {'gamma': 0.0}, {'n': 1}, {'epsilon': 0.0}, {'dt': -0.1},
                        {'t_final': -1.0}, {'r': -1.0}):
            with self.assertRaises(ValueError, msg=str(changes)):
                SimParams(**changes)

    def test_gaussian_source(self):
        source = gaussian_source(500.0, 0.5, 0.2, amplitude=2.0)
        self.assertEqual(2.0, float(source(0.5, 0.2)))
        self.assertLess(float(source(0.5, 0.5)), 1e-18)

    def test_copy(self):
        params = SimParams(n=10, domain='leaf', gamma=0.5)
        copy = params.copy(n=20)
        self.assertEqual(20, copy.n)
        self.assertEqual(0.5, copy.gamma)
        self.assertEqual(DomainType.LEAF, copy.domain)
        self.assertEqual(10, params.n)


if __name__ == '__main__':
    unittest.main()
