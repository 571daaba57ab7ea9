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

import numpy as np

from bionet_simulator.bn_utility.bn_errors import AnalysisError


def wasserstein_distance(u, v, p=1.0):
    """
    p-Wasserstein distance between the empirical distributions of two value vectors,
    integrating |Q_u - Q_v|^p over the merged breakpoints of both quantile functions.
    """
    u = np.sort(np.asarray(u, dtype=float).ravel())
    v = np.sort(np.asarray(v, dtype=float).ravel())
    if not len(u) or not len(v):
        raise AnalysisError("Wasserstein distance needs two nonempty vectors")
    if p < 1:
        raise AnalysisError("Wasserstein order must be at least 1, got %r" % p)
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise AnalysisError("Wasserstein distance of non-finite values")

    nu, nv = len(u), len(v)
    if nu == nv:
        return float(np.mean(np.abs(u - v) ** p) ** (1.0 / p))

    # quantile levels in units of 1 / (nu * nv)
    levels = np.union1d(np.arange(1, nu + 1) * nv, np.arange(1, nv + 1) * nu)
    widths = np.diff(np.concatenate(([0], levels))) / float(nu * nv)
    u_index = (levels + nv - 1) // nv - 1
    v_index = (levels + nu - 1) // nu - 1
    return float(np.dot(widths, np.abs(u[u_index] - v[v_index]) ** p) ** (1.0 / p))
