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

from bionet_simulator.analysis.snapshot import energy_decay_violations
from bionet_simulator.flow.gradient_flow import GradientFlow, run
from bionet_simulator.flow.sim_params import SimParams
from bionet_simulator.geometry.level_set import DomainType
from tests.integration.integration_base_test import IntegrationBaseTest

ROUNDOFF_FLOOR = 1e-10


class LongRunTests(IntegrationBaseTest):

    def test_scalar_closed_form_over_many_steps(self):
        params = SimParams(n=20, d_tilde=0.0, source_amplitude=0.0, tensor_mode=False, gamma=0.75, epsilon=1e-4,
                           c0=1.0)
        flow = GradientFlow(params)
        state = flow.initial_state()
        decay = params.time_step * params.nu_tilde
        for _ in range(100):
            previous = state.c.component(0)
            state = flow.step(state)
            expected = previous / (1.0 + decay * (previous + params.epsilon) ** (params.gamma - 2.0))
            self.assertTrue(np.allclose(expected, state.c.component(0), rtol=0.0, atol=1e-13), state.step)

    def test_leaf_energy_decays(self):
        params = SimParams(n=100, t_final=10.0, domain=DomainType.LEAF)
        trajectory = run(params)
        self.assertEqual([], energy_decay_violations(trajectory.energies, rel_slack=1e-10))

    def test_symmetry_without_metabolic_term(self):
        params = SimParams(n=100, t_final=5.0, nu_tilde=0.0, steady_state_tol=0.0)
        trajectory = run(params, snapshot_every=50)
        self.assertEqual(params.steps, trajectory.final.step)
        for state in trajectory.snapshots:
            self.assertLess(state.symmetry_residual, 1e-8, state.step)

    def test_large_regularization_keeps_symmetry_longer(self):
        residuals = {}
        scale = 0.0
        for epsilon in (1e-1, 1e-4):
            params = SimParams(n=100, t_final=5.0, nu_tilde=0.1, gamma=0.75, epsilon=epsilon, steady_state_tol=0.0)
            final = run(params).final
            self.assertEqual(params.steps, final.step)
            residuals[epsilon] = final.symmetry_residual
            scale = max(scale, float(np.max(final.c.frobenius_norm())))
            self.log.info("epsilon=%g symmetry residual %.3e", epsilon, final.symmetry_residual)
        # residuals below the round-off floor of the fields count as symmetric
        floor = ROUNDOFF_FLOOR * scale
        self.assertLessEqual(max(residuals[1e-1], floor), max(residuals[1e-4], floor))


if __name__ == '__main__':
    unittest.main()
