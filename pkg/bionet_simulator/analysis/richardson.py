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

from math import log

import numpy as np

from bionet_simulator.bn_utility.bn_errors import AnalysisError

GCI_SAFETY_FACTOR = 1.25


def richardson_order(e_coarse, e_fine, rho=2.0):
    if e_coarse <= 0 or e_fine <= 0:
        raise AnalysisError("Richardson order needs positive errors, got %r and %r" % (e_coarse, e_fine))
    if rho <= 1:
        raise AnalysisError("Refinement ratio must exceed 1, got %r" % rho)
    return log(e_coarse / e_fine) / log(rho)


def richardson_extrapolate(f_coarse, f_fine, rho, order):
    return f_fine + (f_fine - f_coarse) / (rho ** order - 1.0)


def grid_convergence_index(values, rho=2.0, safety=GCI_SAFETY_FACTOR):
    """
    Order, extrapolated value and fine-grid convergence index from the last three
    values of a sequence ordered from coarse to fine with constant ratio rho.
    """
    values = np.asarray(values, dtype=float)
    if len(values) < 3:
        raise AnalysisError("Grid convergence index needs at least three values")
    coarse, medium, fine = values[-3:]
    order = richardson_order(abs(medium - coarse), abs(fine - medium), rho)
    extrapolated = richardson_extrapolate(medium, fine, rho, order)
    relative = abs((fine - medium) / fine) if fine != 0 else float('inf')
    return {
        'order': order,
        'extrapolated': extrapolated,
        'gci_fine': safety * relative / (rho ** order - 1.0),
        'relative_error': relative,
    }
