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

from concurrent.futures import ProcessPoolExecutor
from logging import getLogger
from os import path
from time import monotonic

import numpy as np

from bionet_simulator import __version__
from bionet_simulator.analysis.richardson import richardson_order
from bionet_simulator.analysis.snapshot import Snapshot, common_lattice_values, sample_grid
from bionet_simulator.analysis.wasserstein import wasserstein_distance
from bionet_simulator.bn_utility.bn_errors import AnalysisError
from bionet_simulator.bn_utility.bn_logger import BnLogger
from bionet_simulator.flow.gradient_flow import GradientFlow
from bionet_simulator.flow.sim_state import TerminationReason
from bionet_simulator.geometry.level_set import DomainType, rotate_point
from bionet_simulator.service.constants import *
from bionet_simulator.service.run_manifest import RunManifest
from bionet_simulator.storage.snapshot_storage import SnapshotStorage, atomic_write, format_value, read_snapshot

log = getLogger("service")


class SimulationRunner:
    """Runs one configuration and persists energy series, snapshots and manifest into its output folder."""

    def __init__(self, config):
        self.__config = config
        self.__storage = SnapshotStorage(config.storage_config())
        self.__energy_rows = []
        self.__space = None

    @property
    def storage(self):
        return self.__storage

    def __on_step(self, state):
        measure = state.steady_state_measure
        self.__energy_rows.append((state.step, state.time, state.energy,
                                   float('nan') if measure is None else measure, state.min_eigenvalue))

    def __on_snapshot(self, state):
        every = self.__config.snapshot_every
        if every and state.step % every == 0:
            self.__storage.write_snapshot(Snapshot.from_state(self.__space, state))

    def run(self):
        config = self.__config
        started = monotonic()
        errors_before = BnLogger.total_errors()
        params = config.to_sim_params()
        manifest = RunManifest(config_fingerprint=config.fingerprint(), code_version=__version__,
                               schema_version=config.schema_version,
                               initial_condition="C0 = %r * I (constant isotropic)" % config.c0)
        log.info("Starting run %s into %s", manifest.config_fingerprint, config.out_dir)
        try:
            flow = GradientFlow(params)
            self.__space = flow.space
            trajectory = flow.run(snapshot_every=config.snapshot_every, on_step=self.__on_step,
                                  on_snapshot=self.__on_snapshot)
            final = trajectory.final
            manifest.final_snapshot = self.__storage.write_snapshot(Snapshot.from_state(self.__space, final),
                                                                    final=True)
            manifest.step_count = final.step
            manifest.termination_reason = trajectory.termination.value
        except Exception as e:
            manifest.partial = True
            manifest.termination_reason = TerminationReason.ERROR.value
            manifest.error = str(e)
            manifest.step_count = self.__energy_rows[-1][0] if self.__energy_rows else 0
            log.error("Run failed after %i steps: %s", manifest.step_count, e)
            raise
        finally:
            manifest.energy_series = self.__storage.write_energy_series(self.__energy_rows)
            manifest.snapshot_index = self.__storage.write_index(config.schema_version)
            manifest.wall_time = monotonic() - started
            manifest.error_count = BnLogger.total_errors() - errors_before
            self.__storage.write_text(MANIFEST_FILE_NAME, manifest.to_text())
            log.info("Run finished: %r in %.1f s", manifest, manifest.wall_time)
        return manifest


def cmd_run(config):
    return SimulationRunner(config).run()


def final_snapshot(config, manifest):
    return read_snapshot(path.join(config.out_dir, manifest.final_snapshot), n=config.n)


def _run_all(configs, workers=1):
    if workers > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(cmd_run, configs))
    return [cmd_run(config) for config in configs]


def _write_study_table(out_dir, file_name, rows):
    lines = ["N,distance,order"]
    for row in rows:
        lines.append(",".join((str(row['N']),
                               '' if row['distance'] is None else format_value(row['distance']),
                               '' if row['order'] is None else format_value(row['order']))))
    atomic_write(path.join(out_dir, file_name), "\n".join(lines) + "\n")


def _with_orders(n_list, distances):
    """Table rows with the Richardson order between consecutive distances."""
    rows = []
    for k, n in enumerate(n_list):
        order = None
        if k >= 1 and distances[k] is not None and distances[k - 1] is not None \
                and distances[k] > 0 and distances[k - 1] > 0:
            order = richardson_order(distances[k - 1], distances[k], n / n_list[k - 1])
        rows.append({'N': n, 'distance': distances[k], 'order': order})
    return rows


def cmd_converge(config, n_list, workers=1, p=1.0):
    """Runs every resolution and compares final conductivity norms of consecutive resolutions."""
    n_list = sorted(set(int(n) for n in n_list))
    configs = [config.with_overrides(N=n, out_dir=path.join(config.out_dir, "N%i" % n)) for n in n_list]
    manifests = _run_all(configs, workers)
    snapshots = [final_snapshot(c, m) for c, m in zip(configs, manifests)]

    # distance k compares resolution k with resolution k - 1
    distances = [None]
    for coarse, fine in zip(snapshots, snapshots[1:]):
        distances.append(wasserstein_distance(*common_lattice_values(coarse, fine), p=p))
    rows = _with_orders(n_list, distances)
    _write_study_table(config.out_dir, CONVERGENCE_FILE_NAME, rows)
    log.info("Convergence study over N=%s written to %s", n_list, CONVERGENCE_FILE_NAME)
    return rows


def rotation_distance(unrotated, rotated, theta, p=1.0):
    """Distance between an unrotated solution and a rotated one mapped back onto the unrotated lattice."""
    coordinates = unrotated.coordinates()
    x, y = rotate_point(coordinates[:, 0], coordinates[:, 1], theta)
    mapped = sample_grid(rotated, x, y)
    values = unrotated.conductivity_norm()
    usable = np.isfinite(mapped)
    if not usable.any():
        raise AnalysisError("Rotated solution does not cover any node of the unrotated lattice")
    return wasserstein_distance(values[usable], mapped[usable], p=p)


def cmd_rotate(config, theta, n_list=None, workers=1, p=1.0):
    n_list = sorted(set(int(n) for n in (n_list or [config.n])))
    configs = []
    for n in n_list:
        base = config.with_overrides(N=n, domain=DomainType.LEAF.value, theta=0.0,
                                     out_dir=path.join(config.out_dir, "N%i_unrotated" % n))
        source_x, source_y = rotate_point(base.source_x, base.source_y, theta)
        configs.append(base)
        configs.append(base.with_overrides(domain=DomainType.ROTATED_LEAF.value, theta=theta,
                                           source_x=float(source_x), source_y=float(source_y),
                                           out_dir=path.join(config.out_dir, "N%i_rotated" % n)))
    manifests = _run_all(configs, workers)
    snapshots = [final_snapshot(c, m) for c, m in zip(configs, manifests)]

    distances = [rotation_distance(snapshots[2 * k], snapshots[2 * k + 1], theta, p=p) for k in range(len(n_list))]
    rows = _with_orders(n_list, distances)
    _write_study_table(config.out_dir, ROTATION_FILE_NAME, rows)
    log.info("Rotation study theta=%.6g over N=%s written to %s", theta, n_list, ROTATION_FILE_NAME)
    return rows


def cmd_distance(file_a, file_b, p=1.0, label=None):
    first = read_snapshot(file_a)
    second = read_snapshot(file_b)
    return wasserstein_distance(*common_lattice_values(first, second, label), p=p)


def cmd_order(e_coarse, e_fine, rho=2.0):
    return richardson_order(e_coarse, e_fine, rho)
