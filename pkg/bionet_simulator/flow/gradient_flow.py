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
from time import monotonic

import numpy as np

from bionet_simulator.analysis.symmetry import reflection_residual
from bionet_simulator.bn_utility.bn_errors import SimulationDivergedError
from bionet_simulator.fem.assembler import assemble_load, assemble_mass, assemble_stiffness
from bionet_simulator.fem.fe_space import CoefficientSampling, build_space
from bionet_simulator.fem.nodal_field import NodalField, frobenius_norm
from bionet_simulator.fem.neumann_solver import EquilibratedFactor, NeumannSolver
from bionet_simulator.flow.sim_state import SimState, TerminationReason, Trajectory

log = getLogger("solver")

# Tensor components are stored as (C11, C12, C22); the off-diagonal entry appears twice in C.
TENSOR_MULTIPLICITY = np.array((1.0, 2.0, 1.0))


class GradientFlow:
    """
    Semi-implicit time stepping of the conductivity on one finite element space.
    Unit mass, Neumann Laplacian and source load are assembled once.
    """

    def __init__(self, params, space=None):
        self.__params = params
        if space is None:
            space = build_space(params.level_set(), params.n, zeta=params.zeta, alpha=params.alpha,
                                sampling=params.coeff_sampling)
        self.__space = space
        self.__mass = assemble_mass(space)
        self.__laplacian = assemble_stiffness(space)
        self.__source_load = assemble_load(space, params.source())
        self.__nodal = space.sampling == CoefficientSampling.NODAL_Q5

    @property
    def params(self):
        return self.__params

    @property
    def space(self):
        return self.__space

    @property
    def mass(self):
        return self.__mass

    @property
    def laplacian(self):
        return self.__laplacian

    def initial_state(self):
        c = NodalField.isotropic(self.__space.n_dofs, self.__params.c0, self.__params.tensor_mode)
        return self.complete(SimState(0, 0.0, c))

    def __cell_tensors(self, c):
        """C + rI at the cell centroids as (n_cells, 3) stored entries, or (n_cells,) in scalar mode."""
        values = self.__space.cell_values(c.values)
        r = self.__params.r
        if c.components == 1:
            return values[:, 0] + r
        shifted = values.copy()
        shifted[:, 0] += r
        shifted[:, 2] += r
        return shifted

    def __pressure_coefficient(self, c):
        if not self.__nodal:
            return self.__cell_tensors(c)
        values = c.values.copy()
        values[:, 0] += self.__params.r
        if c.components == 3:
            values[:, 2] += self.__params.r
        return NodalField(values, c.labels)

    def pressure_solver(self, c):
        stiffness = assemble_stiffness(self.__space, self.__pressure_coefficient(c))
        return NeumannSolver(stiffness, self.__space.lumped_mass, method=self.__params.solver,
                             tol=self.__params.solver_tol)

    def solve_pressure(self, state, solver=None):
        solver = solver if solver is not None else self.pressure_solver(state.c)
        return NodalField.scalar(solver.solve(self.__source_load), 'p')

    @staticmethod
    def __quadratic_form(tensors, gx, gy, hx=None, hy=None):
        """a . (C + rI) b per cell, with b defaulting to a."""
        hx = gx if hx is None else hx
        hy = gy if hy is None else hy
        if tensors.ndim == 1:
            return tensors * (gx * hx + gy * hy)
        return tensors[:, 0] * gx * hx + tensors[:, 1] * (gx * hy + gy * hx) + tensors[:, 2] * gy * hy

    def solve_sigma(self, state, p, solver=None):
        space = self.__space
        solver = solver if solver is not None else self.pressure_solver(state.c)
        gradient = space.cell_gradients(p.values[:, 0])
        p_cells = space.cell_values(p.values[:, 0])
        tensors = self.__cell_tensors(state.c)
        rhs = self.__params.entropy.phi3(p_cells) * self.__quadratic_form(tensors, gradient[:, 0], gradient[:, 1])
        return NodalField.scalar(solver.solve(assemble_load(space, rhs)), 'sigma')

    def forcing(self, c, p, sigma):
        """Per-cell forcing Phi''(p) grad p (x) grad p + sym(grad sigma (x) grad p), shape (n_cells, components)."""
        space = self.__space
        gp = space.cell_gradients(p.values[:, 0])
        gs = space.cell_gradients(sigma.values[:, 0])
        weight = self.__params.entropy.phi2(space.cell_values(p.values[:, 0]))
        px, py = gp[:, 0], gp[:, 1]
        sx, sy = gs[:, 0], gs[:, 1]
        if c.components == 1:
            return (weight * (px * px + py * py) + px * sx + py * sy)[:, None]
        return np.column_stack((weight * px * px + sx * px,
                                weight * px * py + 0.5 * (sx * py + px * sy),
                                weight * py * py + sy * py))

    def energy(self, state):
        params = self.__params
        space = self.__space
        c = state.c
        p = state.p if state.p is not None else self.solve_pressure(state)

        multiplicity = TENSOR_MULTIPLICITY if c.is_tensor else np.ones(1)
        diffusion = sum(multiplicity[k] * float(c.values[:, k] @ (self.__laplacian @ c.values[:, k]))
                        for k in range(c.components))

        gradient = space.cell_gradients(p.values[:, 0])
        tensors = self.__cell_tensors(c)
        activation = params.entropy.phi2(space.cell_values(p.values[:, 0])) \
            * self.__quadratic_form(tensors, gradient[:, 0], gradient[:, 1])
        norms = frobenius_norm(space.cell_values(c.values))
        metabolic = (params.nu_tilde / params.gamma) * norms ** params.gamma

        return 0.5 * params.d_tilde ** 2 * diffusion + float(np.dot(space.areas, activation + metabolic))

    def complete(self, state):
        """Fills p, sigma, energy and diagnostics of a state from its conductivity."""
        solver = self.pressure_solver(state.c)
        state.p = self.solve_pressure(state, solver)
        state.sigma = self.solve_sigma(state, state.p, solver)
        state.energy = self.energy(state)
        state.diagnostics['min_eigenvalue'] = state.c.min_eigenvalue() if state.c.n_dofs else 0.0
        grid = self.__space.nodal_to_grid(state.c.frobenius_norm())
        state.diagnostics['symmetry_residual'] = reflection_residual(grid, grid[:, ::-1])
        return state

    def step(self, state):
        params = self.__params
        space = self.__space
        dt = params.time_step
        if state.p is None or state.sigma is None:
            solver = self.pressure_solver(state.c)
            state.p = self.solve_pressure(state, solver)
            state.sigma = self.solve_sigma(state, state.p, solver)

        forcing = self.forcing(state.c, state.p, state.sigma)
        weights = (frobenius_norm(space.cell_values(state.c.values)) + params.epsilon) ** (params.gamma - 2.0)
        metabolic = assemble_mass(space, weights)
        diffusion = params.d_tilde ** 2 * self.__laplacian
        factor = EquilibratedFactor(self.__mass + dt * diffusion + (dt * params.nu_tilde) * metabolic)

        # increment form: a zero right-hand side leaves C unchanged exactly
        updated = np.empty_like(state.c.values)
        for k in range(state.c.components):
            c = state.c.values[:, k]
            rhs = dt * (assemble_load(space, forcing[:, k]) - diffusion @ c - params.nu_tilde * (metabolic @ c))
            updated[:, k] = c + factor.solve(rhs)

        new_step = state.step + 1
        if not np.all(np.isfinite(updated)):
            raise SimulationDivergedError("Conductivity update produced non-finite values", new_step)

        new_state = SimState(new_step, new_step * dt, NodalField(updated, state.c.labels))
        new_state.diagnostics['steady_state_measure'] = float(np.max(np.abs(updated - state.c.values))) / dt \
            if updated.size else 0.0
        return self.complete(new_state)

    def run(self, snapshot_every=0, on_step=None, on_snapshot=None):
        """
        Iterates up to ceil(T / dt) steps from the constant initial conductivity.
        on_step receives every state, on_snapshot the states kept at the cadence plus the final one.
        """
        params = self.__params
        trajectory = Trajectory()
        started = monotonic()

        state = self.initial_state()
        self.__record(trajectory, state, on_step, on_snapshot, keep=True)
        total = params.steps
        log.info("Running %i steps, dt=%.6g, n=%i, %i dofs", total, params.time_step, params.n,
                 self.__space.n_dofs)

        for _ in range(total):
            state = self.step(state)
            keep = bool(snapshot_every) and state.step % snapshot_every == 0
            steady = state.steady_state_measure < params.steady_state_tol
            last = steady or state.step == total
            self.__record(trajectory, state, on_step, on_snapshot, keep=keep or last)
            log.debug("Step %i: t=%.6g E=%.12e dC=%.3e", state.step, state.time, state.energy,
                      state.steady_state_measure)
            if steady:
                trajectory.termination = TerminationReason.STEADY_STATE
                log.info("Steady state reached at step %i", state.step)
                break

        log.info("Finished %i steps in %.1f s", state.step, monotonic() - started)
        return trajectory

    @staticmethod
    def __record(trajectory, state, on_step, on_snapshot, keep):
        measure = state.steady_state_measure
        trajectory.energy_rows.append((state.step, state.time, state.energy,
                                       float('nan') if measure is None else measure, state.min_eigenvalue))
        if on_step is not None:
            on_step(state)
        if keep:
            trajectory.snapshots.append(state)
            if on_snapshot is not None:
                on_snapshot(state)


def solve_pressure(state, params, space):
    return GradientFlow(params, space).solve_pressure(state)


def solve_sigma(state, p, params, space):
    return GradientFlow(params, space).solve_sigma(state, p)


def step(state, params, space):
    return GradientFlow(params, space).step(state)


def energy(state, params, space):
    return GradientFlow(params, space).energy(state)


def run(params, space=None, snapshot_every=0, on_step=None, on_snapshot=None):
    return GradientFlow(params, space).run(snapshot_every=snapshot_every, on_step=on_step, on_snapshot=on_snapshot)
