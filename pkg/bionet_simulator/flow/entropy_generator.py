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

from enum import Enum

import numpy as np

from bionet_simulator.bn_utility.bn_errors import EntropyDomainError


class EntropyVariant(Enum):
    QUARTIC = 'quartic'
    FISHER = 'fisher'
    MIXED = 'mixed'
    QUADRATIC = 'quadratic'

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        for member in cls:
            if member.value == str(name).strip().lower():
                return member
        raise ValueError("Unknown entropy generator '%s'" % name)


class EntropyGenerator:
    """
    Convex generator of the pressure entropy term.
    quartic: p^4/12, fisher: (p+1)(ln(p+1)-1) for p > -1, mixed: weighted sum, quadratic: p^2/2.
    """

    def __init__(self, variant=EntropyVariant.QUARTIC, quartic_weight=0.5, fisher_weight=0.5):
        self.__variant = EntropyVariant.from_name(variant)
        self.__quartic_weight = float(quartic_weight)
        self.__fisher_weight = float(fisher_weight)

    @property
    def variant(self):
        return self.__variant

    def __check_fisher_domain(self, p):
        if self.__variant in (EntropyVariant.FISHER, EntropyVariant.MIXED) and np.any(p <= -1.0):
            raise EntropyDomainError("Fisher entropy is undefined for pressure %.6g <= -1" % float(np.min(p)))

    def phi(self, p):
        p = np.asarray(p, dtype=float)
        if self.__variant == EntropyVariant.QUADRATIC:
            return 0.5 * p * p
        if self.__variant == EntropyVariant.QUARTIC:
            return p ** 4 / 12.0
        self.__check_fisher_domain(p)
        fisher = (p + 1.0) * (np.log1p(p) - 1.0)
        if self.__variant == EntropyVariant.FISHER:
            return fisher
        return self.__quartic_weight * p ** 4 / 12.0 + self.__fisher_weight * fisher

    def phi2(self, p):
        p = np.asarray(p, dtype=float)
        if self.__variant == EntropyVariant.QUADRATIC:
            return np.ones_like(p)
        if self.__variant == EntropyVariant.QUARTIC:
            return p * p
        self.__check_fisher_domain(p)
        fisher = 1.0 / (p + 1.0)
        if self.__variant == EntropyVariant.FISHER:
            return fisher
        return self.__quartic_weight * p * p + self.__fisher_weight * fisher

    def phi3(self, p):
        p = np.asarray(p, dtype=float)
        if self.__variant == EntropyVariant.QUADRATIC:
            return np.zeros_like(p)
        if self.__variant == EntropyVariant.QUARTIC:
            return 2.0 * p
        self.__check_fisher_domain(p)
        fisher = -1.0 / (p + 1.0) ** 2
        if self.__variant == EntropyVariant.FISHER:
            return fisher
        return self.__quartic_weight * 2.0 * p + self.__fisher_weight * fisher

    def __repr__(self):
        return "EntropyGenerator(%s)" % self.__variant.value


def phi2(generator, p):
    return generator.phi2(p)


def phi3(generator, p):
    return generator.phi3(p)
