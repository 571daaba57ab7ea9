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
from math import pi

import numpy as np

from bionet_simulator.geometry.level_set import DomainType, LevelSet, eval_level_set, eval_level_set_grid, \
    rotate_point
from tests.unit.BaseUnitTest import BaseUnitTest


class LevelSetTests(BaseUnitTest):

    def test_circle_sign(self):
        circle = LevelSet.circle()
        self.assertAlmostEqual(-0.45, eval_level_set(circle, 0.5, 0.5), places=12)
        self.assertAlmostEqual(0.0, eval_level_set(circle, 0.5, 0.95), places=12)
        self.assertGreater(eval_level_set(circle, 0.0, 0.0), 0.0)

    def test_leaf_is_intersection_of_discs(self):
        leaf = LevelSet.leaf()
        self.assertAlmostEqual(-0.3, eval_level_set(leaf, 0.5, 0.5), places=12)
        # inside the left disc only
        self.assertAlmostEqual(0.1, eval_level_set(leaf, 0.1, 0.5), places=12)
        self.assertAlmostEqual(0.1, eval_level_set(leaf, 0.9, 0.5), places=12)

    def test_rotate_point_quarter_turn(self):
        x, y = rotate_point(1.0, 0.5, pi / 2)
        self.assertAlmostEqual(0.5, float(x), places=12)
        self.assertAlmostEqual(1.0, float(y), places=12)

    def test_rotated_leaf_matches_leaf_at_rotated_points(self):
        theta = 0.3
        leaf = LevelSet.leaf()
        rotated = LevelSet.rotated_leaf(theta)
        xs = np.linspace(0.05, 0.95, 13)
        x, y = np.meshgrid(xs, xs)
        rx, ry = rotate_point(x, y, theta)
        self.assertTrue(np.allclose(leaf(x, y), rotated(rx, ry), atol=1e-14))

    def test_rotated_leaf_stays_in_the_unit_square(self):
        n = 64
        for theta in np.linspace(0.0, 2.0 * pi, 13):
            rotated = LevelSet.rotated_leaf(theta)
            self.assertTrue(np.allclose([0.5, 0.5], np.mean(rotated.centers, axis=0), atol=1e-15))
            inside = eval_level_set_grid(rotated, n) < 0
            self.assertTrue(inside.any())
            border = np.concatenate((inside[0], inside[-1], inside[:, 0], inside[:, -1]))
            self.assertFalse(border.any(), "theta=%.3f" % theta)

    def test_rotation_by_zero_is_the_leaf(self):
        self.assertTrue(np.allclose(eval_level_set_grid(LevelSet.leaf(), 8),
                                    eval_level_set_grid(LevelSet.rotated_leaf(0.0), 8), atol=1e-15))

    def test_grid_orientation(self):
        circle = LevelSet.circle()
        n = 10
        grid = eval_level_set_grid(circle, n)
        self.assertEqual((n + 1, n + 1), grid.shape)
        self.assertAlmostEqual(eval_level_set(circle, 3 / n, 7 / n), grid[7, 3], places=12)
        self.assertAlmostEqual(eval_level_set(circle, 7 / n, 3 / n), grid[3, 7], places=12)

    def test_exact_areas(self):
        self.assertAlmostEqual(pi * 0.45 ** 2, LevelSet.circle().exact_area(), places=14)
        r, d = 0.4, 0.2
        lens = 2 * r * r * np.arccos(d / (2 * r)) - 0.5 * d * np.sqrt(4 * r * r - d * d)
        self.assertAlmostEqual(lens, LevelSet.leaf().exact_area(), places=14)
        self.assertAlmostEqual(LevelSet.leaf().exact_area(), LevelSet.rotated_leaf(1.1).exact_area(), places=14)

    def test_outward_normal_of_circle(self):
        nx, ny = LevelSet.circle().outward_normal(0.95, 0.5)
        self.assertAlmostEqual(1.0, float(nx), places=6)
        self.assertAlmostEqual(0.0, float(ny), places=6)

    def test_domain_names(self):
        self.assertEqual(DomainType.ROTATED_LEAF, DomainType.from_name(" Rotated_Leaf "))
        self.assertEqual(DomainType.LEAF, LevelSet.from_domain('leaf').variant)
        with self.assertRaises(ValueError):
            DomainType.from_name('square')

    def test_invalid_shapes(self):
        with self.assertRaises(ValueError):
            LevelSet(DomainType.CIRCLE, ((0.5, 0.5),), 0.0)
        with self.assertRaises(ValueError):
            LevelSet(DomainType.LEAF, ((0.5, 0.5),), 0.4)


if __name__ == '__main__':
    unittest.main()
