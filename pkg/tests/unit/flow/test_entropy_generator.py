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

from bionet_simulator.bn_utility.bn_errors import EntropyDomainError
from bionet_simulator.flow.entropy_generator import EntropyGenerator, EntropyVariant, phi2, phi3
from tests.unit.BaseUnitTest import BaseUnitTest


class EntropyGeneratorTests(BaseUnitTest):

    def test_quartic(self):
        generator = EntropyGenerator(EntropyVariant.QUARTIC)
        self.assertEqual(9.0, float(phi2(generator, 3.0)))
        self.assertEqual(6.0, float(phi3(generator, 3.0)))
        self.assertAlmostEqual(81.0 / 12.0, float(generator.phi(3.0)), places=14)

    def test_fisher(self):
        generator = EntropyGenerator('fisher')
        self.assertEqual(1.0, float(generator.phi2(0.0)))
        self.assertEqual(-1.0, float(generator.phi3(0.0)))
        self.assertEqual(-1.0, float(generator.phi(0.0)))
        self.assertAlmostEqual(0.5, float(generator.phi2(1.0)), places=15)

    def test_mixed_is_weighted_sum(self):
        generator = EntropyGenerator(EntropyVariant.MIXED)
        self.assertAlmostEqual(0.75, float(generator.phi2(1.0)), places=15)
        self.assertAlmostEqual(0.875, float(generator.phi3(1.0)), places=15)
        weighted = EntropyGenerator(EntropyVariant.MIXED, quartic_weight=1.0, fisher_weight=0.0)
        self.assertAlmostEqual(4.0, float(weighted.phi2(2.0)), places=15)

    def test_quadratic(self):
        generator = EntropyGenerator(EntropyVariant.QUADRATIC)
        p = np.array([-3.0, 0.0, 2.0])
        self.assertTrue(np.array_equal(np.ones(3), generator.phi2(p)))
        self.assertTrue(np.array_equal(np.zeros(3), generator.phi3(p)))

    def test_phi3_is_derivative_of_phi2(self):
        p = np.linspace(-0.5, 2.0, 7)
        step = 1e-6
        for variant in EntropyVariant:
            generator = EntropyGenerator(variant)
            numeric = (generator.phi2(p + step) - generator.phi2(p - step)) / (2 * step)
            self.assertTrue(np.allclose(numeric, generator.phi3(p), atol=1e-6), variant)

    def test_fisher_domain(self):
        with self.assertRaises(EntropyDomainError):
            EntropyGenerator(EntropyVariant.FISHER).phi2(np.array([0.0, -1.0]))
        with self.assertRaises(EntropyDomainError):
            EntropyGenerator(EntropyVariant.MIXED).phi3(-2.0)
        self.assertEqual(1.0, float(EntropyGenerator(EntropyVariant.QUARTIC).phi2(-1.0)))

    def test_unknown_variant(self):
        with self.assertRaises(ValueError):
            EntropyGenerator('cubic')


if __name__ == '__main__':
    unittest.main()
