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
from math import sqrt

import numpy as np

from bionet_simulator.analysis.snapshot import Snapshot, energy_decay_violations
from bionet_simulator.analysis.symmetry import symmetry_residual
from bionet_simulator.flow.gradient_flow import GradientFlow, energy, run
from bionet_simulator.flow.sim_params import SimParams
from bionet_simulator.flow.sim_state import TerminationReason
from tests.unit.BaseUnitTest import BaseUnitTest


class GradientFlowTests(BaseUnitTest):

    def setUp(self):
        self.quiet = SimParams(n=12, d_tilde=0.0, source_amplitude=0.0, t_final=1.0)

    def test_decoupled_step_has_closed_form(self):
        params = self.quiet
        flow = GradientFlow(params)
        state = flow.initial_state()
        self.assertTrue(np.array_equal(np.zeros(flow.space.n_dofs), state.p.values[:, 0]))

        following = flow.step(state)
        weight = (sqrt(2.0) + params.epsilon) ** (params.gamma - 2.0)
        expected = 1.0 / (1.0 + params.time_step * params.nu_tilde * weight)
        self.assertTrue(np.allclose(expected, following.c.component(0), rtol=0.0, atol=1e-13))
        self.assertTrue(np.allclose(expected, following.c.component(2), rtol=0.0, atol=1e-13))
        self.assertTrue(np.allclose(0.0, following.c.component(1), atol=1e-13))
        self.assertEqual(1, following.step)
        self.assertAlmostEqual(params.time_step, following.time, places=15)
        self.assertAlmostEqual((1.0 - expected) / params.time_step, following.steady_state_measure, places=10)

    def test_scalar_closed_form(self):
        params = self.quiet.copy(tensor_mode=False, gamma=1.5)
        flow = GradientFlow(params)
        following = flow.step(flow.initial_state())
        expected = 1.0 / (1.0 + params.time_step * params.nu_tilde * (1.0 + params.epsilon) ** -0.5)
        self.assertEqual(('C',), following.c.labels)
        self.assertTrue(np.allclose(expected, following.c.component(0), rtol=0.0, atol=1e-13))

    def test_without_forces_the_state_is_steady(self):
        params = self.quiet.copy(nu_tilde=0.0)
        trajectory = run(params)
        self.assertEqual(TerminationReason.STEADY_STATE, trajectory.termination)
        self.assertEqual(2, len(trajectory.energy_rows))
        self.assertTrue(np.array_equal(trajectory.snapshots[0].c.values, trajectory.final.c.values))
        self.assertEqual(0.0, trajectory.final.steady_state_measure)

    def test_scalar_closed_form_holds_every_step(self):
        params = self.quiet.copy(tensor_mode=False, gamma=0.75, epsilon=1e-4, n=20)
        flow = GradientFlow(params)
        state = flow.initial_state()
        decay = params.time_step * params.nu_tilde
        for _ in range(10):
            previous = state.c.component(0)
            state = flow.step(state)
            expected = previous / (1.0 + decay * (previous + params.epsilon) ** (params.gamma - 2.0))
            self.assertAllClose(state.c.component(0), expected, atol=1e-13, msg="step %i" % state.step)

    def test_energy_of_constant_conductivity(self):
        c0 = 2.0
        params = self.quiet.copy(c0=c0, d_tilde=0.01)
        flow = GradientFlow(params)
        state = flow.initial_state()
        expected = flow.space.area * (params.nu_tilde / params.gamma) * (c0 * sqrt(2.0)) ** params.gamma
        self.assertAlmostEqual(expected, state.energy, places=12)
        self.assertAlmostEqual(state.energy, energy(state, params, flow.space), places=14)

    def test_zero_final_time(self):
        trajectory = run(self.quiet.copy(t_final=0.0))
        self.assertEqual(TerminationReason.T_REACHED, trajectory.termination)
        self.assertEqual(1, len(trajectory.energy_rows))
        self.assertEqual(0, trajectory.final.step)
        self.assertTrue(np.isnan(trajectory.energy_rows[0][3]))

    def test_driven_circle_run(self):
        params = SimParams(n=12, t_final=0.5)
        steps = []
        trajectory = run(params, snapshot_every=2, on_step=steps.append)
        self.assertEqual(params.steps + 1, len(trajectory.energy_rows))
        self.assertEqual(list(range(params.steps + 1)), [state.step for state in steps])
        expected = sorted(set(range(0, params.steps + 1, 2)) | {params.steps})
        self.assertEqual(expected, [state.step for state in trajectory.snapshots])
        self.assertTrue(all(np.isfinite(trajectory.energies)))
        for state in trajectory.snapshots:
            self.assertFalse(state.c.has_non_finite())
            self.assertLess(state.symmetry_residual, 1e-8)
        self.assertLess(trajectory.final.c.max_abs_difference(steps[0].c), 1.0)

    def test_one_step_commutes_with_the_mirrors_of_the_circle(self):
        params = SimParams(n=12, t_final=0.5, epsilon=1e-3)
        flow = GradientFlow(params)
        following = flow.step(flow.initial_state())
        snapshot = Snapshot.from_state(flow.space, following)
        for axis in ('x', 'y', 'diagonal'):
            self.assertLess(symmetry_residual(snapshot, axis), 1e-11, axis)
            self.assertLess(symmetry_residual(snapshot, axis, label='p'), 1e-11, axis)


    def test_pressure_has_zero_mean_and_sigma_is_computed(self):
        params = SimParams(n=12, t_final=0.1)
        flow = GradientFlow(params)
        state = flow.initial_state()
        self.assertAlmostEqual(0.0, flow.space.mean(state.p.values[:, 0]), places=12)
        self.assertGreater(float(np.max(np.abs(state.p.values))), 0.0)
        self.assertEqual(('sigma',), state.sigma.labels)
        self.assertEqual(flow.space.n_dofs, state.sigma.n_dofs)

    def test_nodal_sampling_and_entropies(self):
        for changes in ({'coeff_sampling': 'nodal-q5'}, {'entropy': 'fisher'}, {'entropy': 'mixed'},
                        {'entropy': 'quadratic', 'tensor_mode': False}):
            params = SimParams(n=10, t_final=0.2, **changes)
            trajectory = run(params)
            self.assertEqual(params.steps + 1, len(trajectory.energy_rows), changes)
            self.assertTrue(all(np.isfinite(trajectory.energies)), changes)

    def test_energy_decay_check(self):
        self.assertEqual([], energy_decay_violations([3.0, 5.0, 4.0, 4.0, 2.0]))
        self.assertEqual([3], energy_decay_violations([3.0, 2.0, 1.0, 1.5]))


if __name__ == '__main__':
    unittest.main()
