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

from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from bionet_simulator.bn_utility.bn_errors import UnsupportedRuleError

SUPPORTED_RULE_SIZES = (3, 5)


class EdgeRule:
    """Gauss-Legendre points and weights mapped onto [0, 1]."""

    def __init__(self, nodes, weights):
        self.__nodes = np.asarray(nodes, dtype=float)
        self.__weights = np.asarray(weights, dtype=float)

    @property
    def count(self):
        return len(self.__nodes)

    @property
    def nodes(self):
        return self.__nodes

    @property
    def weights(self):
        return self.__weights

    @property
    def exact_degree(self):
        return 2 * self.count - 1

    def __repr__(self):
        return "EdgeRule(q=%i)" % self.count


@lru_cache(maxsize=None)
def gauss_legendre_nodes(q):
    if q not in SUPPORTED_RULE_SIZES:
        raise UnsupportedRuleError("Gauss-Legendre rule with %r points is not supported, use one of %s"
                                   % (q, SUPPORTED_RULE_SIZES))
    nodes, weights = leggauss(q)
    return EdgeRule((nodes + 1.0) / 2.0, weights / 2.0)
