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

from os import path

from bionet_simulator.flow import sim_params

# Configuration keys, in the canonical order of a serialized config

DOMAIN_PARAMETER = "domain"
N_PARAMETER = "N"
D_TILDE_PARAMETER = "D_tilde"
NU_TILDE_PARAMETER = "nu_tilde"
GAMMA_PARAMETER = "gamma"
EPSILON_PARAMETER = "epsilon"
R_PARAMETER = "r"
OMEGA_PARAMETER = "omega"
SOURCE_X_PARAMETER = "source_x"
SOURCE_Y_PARAMETER = "source_y"
T_PARAMETER = "T"
DT_PARAMETER = "dt"
C0_PARAMETER = "C0"
ENTROPY_PARAMETER = "entropy"
TENSOR_MODE_PARAMETER = "tensor_mode"
THETA_PARAMETER = "theta"
ZETA_PARAMETER = "zeta"
ALPHA_PARAMETER = "alpha"
SNAPSHOT_EVERY_PARAMETER = "snapshot_every"
OUT_DIR_PARAMETER = "out_dir"
COEFF_SAMPLING_PARAMETER = "coeff_sampling"
SOLVER_TOL_PARAMETER = "solver_tol"
SOLVER_PARAMETER = "solver"
SCHEMA_VERSION_PARAMETER = "schema_version"

CONFIG_KEYS = (DOMAIN_PARAMETER, N_PARAMETER, D_TILDE_PARAMETER, NU_TILDE_PARAMETER, GAMMA_PARAMETER,
               EPSILON_PARAMETER, R_PARAMETER, OMEGA_PARAMETER, SOURCE_X_PARAMETER, SOURCE_Y_PARAMETER,
               T_PARAMETER, DT_PARAMETER, C0_PARAMETER, ENTROPY_PARAMETER, TENSOR_MODE_PARAMETER, THETA_PARAMETER,
               ZETA_PARAMETER, ALPHA_PARAMETER, SNAPSHOT_EVERY_PARAMETER, OUT_DIR_PARAMETER,
               COEFF_SAMPLING_PARAMETER, SOLVER_TOL_PARAMETER, SOLVER_PARAMETER, SCHEMA_VERSION_PARAMETER)

# Defaults

SCHEMA_VERSION = "1.0"
DEFAULT_DOMAIN = "circle"
DEFAULT_ENTROPY = "quartic"
DEFAULT_TENSOR_MODE = True
DEFAULT_THETA = 0.0
DEFAULT_SNAPSHOT_EVERY = 0
DEFAULT_OUT_DIR = "./output"
DEFAULT_COEFF_SAMPLING = "centroid"
DEFAULT_SOLVER = "direct"

DEFAULT_VALUES = {
    DOMAIN_PARAMETER: DEFAULT_DOMAIN,
    N_PARAMETER: sim_params.DEFAULT_N,
    D_TILDE_PARAMETER: sim_params.DEFAULT_D_TILDE,
    NU_TILDE_PARAMETER: sim_params.DEFAULT_NU_TILDE,
    GAMMA_PARAMETER: sim_params.DEFAULT_GAMMA,
    EPSILON_PARAMETER: sim_params.DEFAULT_EPSILON,
    R_PARAMETER: sim_params.DEFAULT_R,
    OMEGA_PARAMETER: sim_params.DEFAULT_OMEGA,
    T_PARAMETER: sim_params.DEFAULT_T,
    DT_PARAMETER: None,
    C0_PARAMETER: sim_params.DEFAULT_C0,
    ENTROPY_PARAMETER: DEFAULT_ENTROPY,
    TENSOR_MODE_PARAMETER: DEFAULT_TENSOR_MODE,
    THETA_PARAMETER: DEFAULT_THETA,
    ZETA_PARAMETER: sim_params.DEFAULT_ZETA,
    ALPHA_PARAMETER: sim_params.DEFAULT_ALPHA,
    SNAPSHOT_EVERY_PARAMETER: DEFAULT_SNAPSHOT_EVERY,
    OUT_DIR_PARAMETER: DEFAULT_OUT_DIR,
    COEFF_SAMPLING_PARAMETER: DEFAULT_COEFF_SAMPLING,
    SOLVER_TOL_PARAMETER: sim_params.DEFAULT_SOLVER_TOL,
    SOLVER_PARAMETER: DEFAULT_SOLVER,
    SCHEMA_VERSION_PARAMETER: SCHEMA_VERSION,
}

# Environment overrides

ENV_OUT_DIR = "BN_SIM_OUT_DIR"
ENV_SNAPSHOT_EVERY = "BN_SIM_SNAPSHOT_EVERY"
ENV_SOLVER_TOL = "BN_SIM_SOLVER_TOL"
ENV_INTEGRATION = "BN_SIM_INTEGRATION"

# Output files

ENERGY_FILE_NAME = "energy.csv"
SNAPSHOT_INDEX_FILE_NAME = "snapshots.json"
MANIFEST_FILE_NAME = "manifest.txt"
CONVERGENCE_FILE_NAME = "convergence.csv"
ROTATION_FILE_NAME = "rotation.csv"

TIME_UNITS_NOTE = "time column is the rescaled time t~ = c^2 t of the reduced functional"
COMPATIBILITY_NOTE = "elliptic loads are projected onto the zero-mean compatible subspace with the lumped mass"

PACKAGE_DIR = path.dirname(path.dirname(path.abspath(__file__)))
CONFIG_DIR = path.join(PACKAGE_DIR, "config")
LOGS_CONFIG_PATH = path.join(CONFIG_DIR, "logs.json")
DEFAULT_CONFIG_PATH = path.join(CONFIG_DIR, "bn_simulator.conf")
