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

from math import ceil

import numpy as np

from bionet_simulator.fem.fe_space import CoefficientSampling
from bionet_simulator.flow.entropy_generator import EntropyGenerator, EntropyVariant
from bionet_simulator.geometry.level_set import DomainType, LevelSet

DEFAULT_D_TILDE = 4e-6
DEFAULT_NU_TILDE = 4e-2
DEFAULT_EPSILON = 1e-4
DEFAULT_GAMMA = 0.75
DEFAULT_R = 5e-3
DEFAULT_OMEGA = 500.0
DEFAULT_T = 400.0
DEFAULT_N = 100
DEFAULT_C0 = 1.0
DEFAULT_ZETA = 1.0
DEFAULT_ALPHA = 2.0
DEFAULT_SOLVER_TOL = 1e-10
DEFAULT_STEADY_STATE_TOL = 1e-8

DEFAULT_SOURCE_CENTERS = {
    DomainType.CIRCLE: (0.5, 0.5),
    DomainType.LEAF: (0.5, 0.2),
    DomainType.ROTATED_LEAF: (0.5, 0.2),
}


def scale_parameters(d, c, nu):
    """Reduced parameters of the rescaled functional: (D / c, nu / c^2)."""
    if c <= 0:
        raise ValueError("Activation constant c must be positive")
    return d / c, nu / (c * c)


def rescale_time(t, c):
    return c * c * t


def gaussian_source(omega, x_source, y_source, amplitude=1.0):
    def source(x, y):
        return amplitude * np.exp(-omega * ((np.asarray(x) - x_source) ** 2 + (np.asarray(y) - y_source) ** 2))
    return source


class SimParams:
    def __init__(self, n=DEFAULT_N, d_tilde=DEFAULT_D_TILDE, nu_tilde=DEFAULT_NU_TILDE, gamma=DEFAULT_GAMMA,
                 r=DEFAULT_R, epsilon=DEFAULT_EPSILON, omega=DEFAULT_OMEGA, source_x=None, source_y=None,
                 t_final=DEFAULT_T, dt=None, c0=DEFAULT_C0, entropy=EntropyVariant.QUARTIC, tensor_mode=True,
                 domain=DomainType.CIRCLE, theta=0.0, zeta=DEFAULT_ZETA, alpha=DEFAULT_ALPHA,
                 coeff_sampling=CoefficientSampling.CENTROID, solver='direct', solver_tol=DEFAULT_SOLVER_TOL,
                 steady_state_tol=DEFAULT_STEADY_STATE_TOL, source_amplitude=1.0):
        self.n = int(n)
        self.d_tilde = float(d_tilde)
        self.nu_tilde = float(nu_tilde)
        self.gamma = float(gamma)
        self.r = float(r)
        self.epsilon = float(epsilon)
        self.omega = float(omega)
        self.domain = domain if isinstance(domain, DomainType) else DomainType.from_name(domain)
        default_x, default_y = DEFAULT_SOURCE_CENTERS[self.domain]
        self.source_x = default_x if source_x is None else float(source_x)
        self.source_y = default_y if source_y is None else float(source_y)
        self.t_final = float(t_final)
        self.dt = None if dt is None else float(dt)
        self.c0 = float(c0)
        self.entropy = entropy if isinstance(entropy, EntropyGenerator) else EntropyGenerator(entropy)
        self.tensor_mode = bool(tensor_mode)
        self.theta = float(theta)
        self.zeta = float(zeta)
        self.alpha = float(alpha)
        self.coeff_sampling = CoefficientSampling.from_name(coeff_sampling)
        self.solver = solver
        self.solver_tol = float(solver_tol)
        self.steady_state_tol = float(steady_state_tol)
        self.source_amplitude = float(source_amplitude)
        self.validate()

    def validate(self):
        if self.n < 2:
            raise ValueError("N must be at least 2")
        if not 0.0 < self.gamma < 2.0:
            raise ValueError("gamma must lie in (0, 2), got %r" % self.gamma)
        if self.epsilon <= 0.0:
            raise ValueError("epsilon must be positive")
        if self.d_tilde < 0.0 or self.nu_tilde < 0.0 or self.r < 0.0:
            raise ValueError("D_tilde, nu_tilde and r must be non-negative")
        if self.t_final < 0.0:
            raise ValueError("T must be non-negative")
        if self.dt is not None and self.dt <= 0.0:
            raise ValueError("dt must be positive")

    @property
    def h(self):
        return 1.0 / self.n

    @property
    def time_step(self):
        return self.h if self.dt is None else self.dt

    @property
    def steps(self):
        return int(ceil(round(self.t_final / self.time_step, 9)))

    def level_set(self):
        return LevelSet.from_domain(self.domain, self.theta)

    def source(self):
        return gaussian_source(self.omega, self.source_x, self.source_y, self.source_amplitude)

    def copy(self, **changes):
        values = dict(n=self.n, d_tilde=self.d_tilde, nu_tilde=self.nu_tilde, gamma=self.gamma, r=self.r,
                      epsilon=self.epsilon, omega=self.omega, source_x=self.source_x, source_y=self.source_y,
                      t_final=self.t_final, dt=self.dt, c0=self.c0, entropy=self.entropy,
                      tensor_mode=self.tensor_mode, domain=self.domain, theta=self.theta, zeta=self.zeta,
                      alpha=self.alpha, coeff_sampling=self.coeff_sampling, solver=self.solver,
                      solver_tol=self.solver_tol, steady_state_tol=self.steady_state_tol,
                      source_amplitude=self.source_amplitude)
        values.update(changes)
        return SimParams(**values)
