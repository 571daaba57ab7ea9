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
from math import isfinite
from os import environ, path

import mmh3
import regex
from packaging.version import InvalidVersion, Version
from simplejson import JSONDecodeError, load
from yaml import YAMLError, safe_load

from bionet_simulator.bn_utility.bn_errors import ConfigurationError
from bionet_simulator.fem.fe_space import CoefficientSampling
from bionet_simulator.flow.entropy_generator import EntropyVariant
from bionet_simulator.flow.sim_params import DEFAULT_SOURCE_CENTERS, SimParams
from bionet_simulator.geometry.level_set import DomainType
from bionet_simulator.service.constants import *

log = getLogger("service")

LINE_PATTERN = regex.compile(r'(?P<key>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(?P<value>.*?)\s*')
SECTION_PATTERN = regex.compile(r'\[[^\]]*\]')
INLINE_COMMENT_PATTERN = regex.compile(r'\s+#.*$')

TRUE_VALUES = ('true', 'yes', 'on', '1')
FALSE_VALUES = ('false', 'no', 'off', '0')
AUTO_VALUES = ('auto', 'h', 'none', '')
SOLVERS = ('direct', 'cg')


def _as_float(key, value, line=None):
    try:
        result = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError("Expected a real number, got %r" % (value,), key, line)
    if not isfinite(result):
        raise ConfigurationError("Expected a finite number, got %r" % (value,), key, line)
    return result


def _as_int(key, value, line=None):
    if isinstance(value, bool):
        raise ConfigurationError("Expected an integer, got %r" % (value,), key, line)
    if isinstance(value, float) and value.is_integer():
        return int(value)
    try:
        return int(str(value).strip())
    except ValueError:
        raise ConfigurationError("Expected an integer, got %r" % (value,), key, line)


def _as_bool(key, value, line=None):
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in TRUE_VALUES:
        return True
    if text in FALSE_VALUES:
        return False
    raise ConfigurationError("Expected true or false, got %r" % (value,), key, line)


def _as_choice(key, value, choices, line=None):
    text = str(value).strip().lower()
    if text not in choices:
        raise ConfigurationError("Expected one of %s, got %r" % (", ".join(choices), value), key, line)
    return text


def _check(condition, message, key, line):
    if not condition:
        raise ConfigurationError(message, key, line)


class RunConfig:
    """
    Validated run configuration. Built from a flat mapping of key to value,
    with the documented defaults for omitted keys and the source center depending on the domain.
    """

    def __init__(self, config, lines=None):
        lines = lines or {}
        unknown = [key for key in config if key not in CONFIG_KEYS]
        if unknown:
            raise ConfigurationError("Unknown configuration key", unknown[0], lines.get(unknown[0]))

        def get(key):
            return config.get(key, DEFAULT_VALUES.get(key)), lines.get(key)

        value, line = get(DOMAIN_PARAMETER)
        self.domain = _as_choice(DOMAIN_PARAMETER, value, [d.value for d in DomainType], line)
        value, line = get(N_PARAMETER)
        self.n = _as_int(N_PARAMETER, value, line)
        _check(self.n >= 2, "N must be at least 2", N_PARAMETER, line)

        for key, attribute, minimum, strict in ((D_TILDE_PARAMETER, 'd_tilde', 0.0, False),
                                                (NU_TILDE_PARAMETER, 'nu_tilde', 0.0, False),
                                                (EPSILON_PARAMETER, 'epsilon', 0.0, True),
                                                (R_PARAMETER, 'r', 0.0, False),
                                                (OMEGA_PARAMETER, 'omega', 0.0, True),
                                                (T_PARAMETER, 't_final', 0.0, False),
                                                (C0_PARAMETER, 'c0', 0.0, True),
                                                (ZETA_PARAMETER, 'zeta', 0.0, True),
                                                (ALPHA_PARAMETER, 'alpha', 0.0, True)):
            value, line = get(key)
            number = _as_float(key, value, line)
            _check(number > minimum if strict else number >= minimum,
                   "Value %r is out of range, must be %s %r" % (number, '>' if strict else '>=', minimum), key, line)
            setattr(self, attribute, number)

        value, line = get(GAMMA_PARAMETER)
        self.gamma = _as_float(GAMMA_PARAMETER, value, line)
        _check(0.0 < self.gamma < 2.0, "gamma %r is out of range (0, 2)" % self.gamma, GAMMA_PARAMETER, line)

        default_x, default_y = DEFAULT_SOURCE_CENTERS[DomainType.from_name(self.domain)]
        value, line = config.get(SOURCE_X_PARAMETER, default_x), lines.get(SOURCE_X_PARAMETER)
        self.source_x = _as_float(SOURCE_X_PARAMETER, value, line)
        _check(0.0 <= self.source_x <= 1.0, "source_x must lie in [0, 1]", SOURCE_X_PARAMETER, line)
        value, line = config.get(SOURCE_Y_PARAMETER, default_y), lines.get(SOURCE_Y_PARAMETER)
        self.source_y = _as_float(SOURCE_Y_PARAMETER, value, line)
        _check(0.0 <= self.source_y <= 1.0, "source_y must lie in [0, 1]", SOURCE_Y_PARAMETER, line)

        value, line = get(DT_PARAMETER)
        if value is None or str(value).strip().lower() in AUTO_VALUES:
            self.dt = None
        else:
            self.dt = _as_float(DT_PARAMETER, value, line)
            _check(self.dt > 0.0, "dt must be positive", DT_PARAMETER, line)

        value, line = get(ENTROPY_PARAMETER)
        self.entropy = _as_choice(ENTROPY_PARAMETER, value, [e.value for e in EntropyVariant], line)
        value, line = get(TENSOR_MODE_PARAMETER)
        self.tensor_mode = _as_bool(TENSOR_MODE_PARAMETER, value, line)
        value, line = get(THETA_PARAMETER)
        self.theta = _as_float(THETA_PARAMETER, value, line)

        value, line = get(SNAPSHOT_EVERY_PARAMETER)
        self.snapshot_every = _as_int(SNAPSHOT_EVERY_PARAMETER, value, line)
        _check(self.snapshot_every >= 0, "snapshot_every must not be negative", SNAPSHOT_EVERY_PARAMETER, line)

        value, line = get(OUT_DIR_PARAMETER)
        self.out_dir = str(value).strip()
        _check(bool(self.out_dir), "out_dir must not be empty", OUT_DIR_PARAMETER, line)

        value, line = get(COEFF_SAMPLING_PARAMETER)
        self.coeff_sampling = _as_choice(COEFF_SAMPLING_PARAMETER, value, [s.value for s in CoefficientSampling],
                                         line)
        value, line = get(SOLVER_TOL_PARAMETER)
        self.solver_tol = _as_float(SOLVER_TOL_PARAMETER, value, line)
        _check(0.0 < self.solver_tol < 1.0, "solver_tol must lie in (0, 1)", SOLVER_TOL_PARAMETER, line)
        value, line = get(SOLVER_PARAMETER)
        self.solver = _as_choice(SOLVER_PARAMETER, value, SOLVERS, line)

        value, line = get(SCHEMA_VERSION_PARAMETER)
        try:
            version = Version(str(value).strip())
        except InvalidVersion:
            raise ConfigurationError("Invalid schema version %r" % (value,), SCHEMA_VERSION_PARAMETER, line)
        _check(version.major == Version(SCHEMA_VERSION).major,
               "Schema version %s is not supported, expected %s" % (version, SCHEMA_VERSION),
               SCHEMA_VERSION_PARAMETER, line)
        self.schema_version = str(version)

    @property
    def deterministic(self):
        return True

    def as_dict(self):
        return {
            DOMAIN_PARAMETER: self.domain,
            N_PARAMETER: self.n,
            D_TILDE_PARAMETER: self.d_tilde,
            NU_TILDE_PARAMETER: self.nu_tilde,
            GAMMA_PARAMETER: self.gamma,
            EPSILON_PARAMETER: self.epsilon,
            R_PARAMETER: self.r,
            OMEGA_PARAMETER: self.omega,
            SOURCE_X_PARAMETER: self.source_x,
            SOURCE_Y_PARAMETER: self.source_y,
            T_PARAMETER: self.t_final,
            DT_PARAMETER: self.dt,
            C0_PARAMETER: self.c0,
            ENTROPY_PARAMETER: self.entropy,
            TENSOR_MODE_PARAMETER: self.tensor_mode,
            THETA_PARAMETER: self.theta,
            ZETA_PARAMETER: self.zeta,
            ALPHA_PARAMETER: self.alpha,
            SNAPSHOT_EVERY_PARAMETER: self.snapshot_every,
            OUT_DIR_PARAMETER: self.out_dir,
            COEFF_SAMPLING_PARAMETER: self.coeff_sampling,
            SOLVER_TOL_PARAMETER: self.solver_tol,
            SOLVER_PARAMETER: self.solver,
            SCHEMA_VERSION_PARAMETER: self.schema_version,
        }

    def with_overrides(self, **overrides):
        values = {key: value for key, value in self.as_dict().items() if value is not None}
        values.update(overrides)
        if overrides.get(DOMAIN_PARAMETER, self.domain) != self.domain:
            for key in (SOURCE_X_PARAMETER, SOURCE_Y_PARAMETER):
                if key not in overrides:
                    values.pop(key, None)
        return RunConfig(values)

    def to_sim_params(self):
        return SimParams(n=self.n, d_tilde=self.d_tilde, nu_tilde=self.nu_tilde, gamma=self.gamma, r=self.r,
                         epsilon=self.epsilon, omega=self.omega, source_x=self.source_x, source_y=self.source_y,
                         t_final=self.t_final, dt=self.dt, c0=self.c0, entropy=self.entropy,
                         tensor_mode=self.tensor_mode, domain=self.domain, theta=self.theta, zeta=self.zeta,
                         alpha=self.alpha, coeff_sampling=self.coeff_sampling, solver=self.solver,
                         solver_tol=self.solver_tol)

    def storage_config(self):
        return {
            "out_dir": self.out_dir,
            "snapshot_every": self.snapshot_every,
            "energy_file_name": ENERGY_FILE_NAME,
            "index_file_name": SNAPSHOT_INDEX_FILE_NAME,
            "manifest_file_name": MANIFEST_FILE_NAME,
        }

    def fingerprint(self):
        return "%032x" % mmh3.hash128(serialize_config(self), signed=False)

    def __eq__(self, other):
        return isinstance(other, RunConfig) and self.as_dict() == other.as_dict()

    def __repr__(self):
        return "RunConfig(domain=%s, N=%i, entropy=%s, tensor_mode=%s)" % (self.domain, self.n, self.entropy,
                                                                          self.tensor_mode)


def _format(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def serialize_config(config):
    lines = []
    for key, value in config.as_dict().items():
        if value is None:
            continue
        lines.append("%s = %s" % (key, _format(value)))
    return "\n".join(lines) + "\n"


def parse_key_value_text(text):
    """Flat key = value lines; returns ({key: text value}, {key: line number})."""
    values = {}
    lines = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#') or SECTION_PATTERN.fullmatch(stripped):
            continue
        stripped = INLINE_COMMENT_PATTERN.sub('', stripped)
        match = LINE_PATTERN.fullmatch(stripped)
        if match is None:
            raise ConfigurationError("Line is not of the form key = value", line=number)
        key = match.group('key')
        if key in values:
            raise ConfigurationError("Duplicate configuration key", key, number)
        values[key] = match.group('value')
        lines[key] = number
    return values, lines


def get_env_variables():
    env_variables = {}
    if environ.get(ENV_OUT_DIR):
        env_variables[OUT_DIR_PARAMETER] = environ.get(ENV_OUT_DIR)
    if environ.get(ENV_SNAPSHOT_EVERY):
        env_variables[SNAPSHOT_EVERY_PARAMETER] = environ.get(ENV_SNAPSHOT_EVERY)
    if environ.get(ENV_SOLVER_TOL):
        env_variables[SOLVER_TOL_PARAMETER] = environ.get(ENV_SOLVER_TOL)
    return env_variables


def _load_structured(config_path):
    file_extension = config_path.split('.')[-1].lower()
    with open(config_path, encoding='utf-8') as config_file:
        if file_extension == 'json':
            try:
                values = load(config_file)
            except JSONDecodeError as e:
                raise ConfigurationError("Invalid JSON: %s" % e, line=e.lineno)
        else:
            try:
                values = safe_load(config_file)
            except YAMLError as e:
                mark = getattr(e, 'problem_mark', None)
                raise ConfigurationError("Invalid YAML: %s" % e, line=None if mark is None else mark.line + 1)
    values = values or {}
    if not isinstance(values, dict):
        raise ConfigurationError("Configuration file must hold a flat mapping")
    return values


def parse_config(config_path, overrides=None):
    if not path.isfile(config_path):
        raise ConfigurationError("Configuration file '%s' does not exist" % config_path)
    lines = {}
    try:
        if config_path.split('.')[-1].lower() in ('json', 'yaml', 'yml'):
            values = _load_structured(config_path)
        else:
            with open(config_path, encoding='utf-8') as config_file:
                values, lines = parse_key_value_text(config_file.read())
    except OSError as e:
        raise ConfigurationError("Cannot read configuration file '%s': %s" % (config_path, e))

    for key, value in get_env_variables().items():
        log.info("Environment overrides %s = %s", key, value)
        values[key] = value
        lines.pop(key, None)
    for key, value in (overrides or {}).items():
        if value is not None:
            values[key] = value
            lines.pop(key, None)

    config = RunConfig(values, lines)
    log.debug("Loaded %r from %s", config, config_path)
    return config
