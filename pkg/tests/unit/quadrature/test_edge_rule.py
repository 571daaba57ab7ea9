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

from bionet_simulator.bn_utility.bn_errors import UnsupportedRuleError
from bionet_simulator.quadrature.edge_rule import gauss_legendre_nodes
from tests.unit.BaseUnitTest import BaseUnitTest


class EdgeRuleTests(BaseUnitTest):

    def test_supported_rules(self):
        for q in (3, 5):
            rule = gauss_legendre_nodes(q)
            self.assertEqual(q, rule.count)
            self.assertEqual(2 * q - 1, rule.exact_degree)
            self.assertAlmostEqual(1.0, float(rule.weights.sum()), places=15)
            self.assertTrue(np.all((rule.nodes > 0) & (rule.nodes < 1)))
            for degree in range(rule.exact_degree + 1):
                self.assertAlmostEqual(1.0 / (degree + 1), float(rule.weights @ rule.nodes ** degree), places=14)

    def test_rules_are_shared(self):
        self.assertIs(gauss_legendre_nodes(3), gauss_legendre_nodes(3))

    def test_unsupported_rule(self):
        with self.assertRaises(UnsupportedRuleError):
            gauss_legendre_nodes(4)


if __name__ == '__main__':
    unittest.main()
