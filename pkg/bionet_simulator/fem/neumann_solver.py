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

import numpy as np
from scipy.sparse import bmat, csc_matrix, diags
from scipy.sparse.linalg import LinearOperator, cg, splu

from bionet_simulator.bn_utility.bn_errors import SolverConvergenceError, SolverError

log = getLogger("solver")

DIRECT = 'direct'
CONJUGATE_GRADIENT = 'cg'
REFINEMENT_STEPS = 2
MAX_REFINEMENT_STEPS = 5


def project_compatible(b, lumped_mass):
    """Removes the component of b that has no solution for the pure Neumann operator."""
    b = np.asarray(b, dtype=float)
    return b - (b.sum() / lumped_mass.sum()) * lumped_mass


class EquilibratedFactor:
    """
    LU factorization of D^-1/2 A D^-1/2, D being the diagonal of A, for repeated solves with A.
    Each solve is refined while the correction keeps shrinking.
    """

    def __init__(self, matrix, max_refinements=MAX_REFINEMENT_STEPS):
        self.__matrix = matrix.tocsr()
        diagonal = np.abs(self.__matrix.diagonal())
        diagonal[diagonal == 0] = 1.0
        self.__scale = 1.0 / np.sqrt(diagonal)
        scaling = diags(self.__scale)
        self.__max_refinements = max_refinements
        try:
            self.__factor = splu((scaling @ self.__matrix @ scaling).tocsc())
        except RuntimeError as e:
            raise SolverError("Factorization of the equilibrated system failed: %s" % e) from e

    def __apply(self, rhs):
        return self.__scale * self.__factor.solve(self.__scale * rhs)

    def solve(self, rhs):
        x = self.__apply(rhs)
        previous = np.inf
        for _ in range(self.__max_refinements):
            correction = self.__apply(rhs - self.__matrix @ x)
            size = float(np.max(np.abs(correction))) if correction.size else 0.0
            if size == 0.0 or size >= previous:
                break
            x = x + correction
            previous = size
        return x


class NeumannSolver:
    """
    Solves K u = b under zero mean for a singular symmetric operator whose kernel is the constants.
    The factorization is kept, so several right-hand sides for the same operator cost one solve each.
    """

    def __init__(self, stiffness, lumped_mass, method=DIRECT, tol=1e-10, max_iterations=None):
        self.__stiffness = stiffness.tocsr()
        self.__lumped_mass = np.asarray(lumped_mass, dtype=float)
        self.__method = method
        self.__tol = tol
        self.__max_iterations = max_iterations
        self.__factor = None
        self.__preconditioner = None
        if method not in (DIRECT, CONJUGATE_GRADIENT):
            raise SolverError("Unknown linear solver '%s'" % method)
        self.__is_zero = self.__stiffness.nnz == 0 or not np.any(self.__stiffness.data)

    @property
    def method(self):
        return self.__method

    def __factorize(self):
        n = self.__stiffness.shape[0]
        border = csc_matrix(self.__lumped_mass.reshape(n, 1))
        bordered = bmat([[self.__stiffness, border], [border.T, None]], format='csc')
        try:
            self.__factor = splu(bordered)
        except RuntimeError as e:
            raise SolverError("Factorization of the bordered Neumann system failed: %s" % e) from e
        log.debug("Factorized bordered Neumann system of size %i", n + 1)

    def __solve_direct(self, b):
        if self.__factor is None:
            self.__factorize()
        n = len(b)
        rhs = np.append(b, 0.0)
        solution = self.__factor.solve(rhs)
        for _ in range(REFINEMENT_STEPS):
            residual = rhs - np.append(self.__stiffness @ solution[:n] + self.__lumped_mass * solution[n],
                                       self.__lumped_mass @ solution[:n])
            solution = solution + self.__factor.solve(residual)
        return solution[:n]

    def __zero_mean(self, u):
        return u - (self.__lumped_mass @ u) / self.__lumped_mass.sum()

    def __compatible(self, r):
        return project_compatible(np.ravel(r), self.__lumped_mass)

    def __solve_iterative(self, b):
        if self.__preconditioner is None:
            diagonal = self.__stiffness.diagonal()
            diagonal[diagonal == 0] = 1.0
            inverse = 1.0 / diagonal
            n = len(diagonal)
            # Jacobi between the zero-mean projection and its transpose; iterates stay off the constant kernel
            self.__preconditioner = LinearOperator(
                (n, n), matvec=lambda r: self.__zero_mean(inverse * self.__compatible(r)), dtype=float)
        u, info = cg(self.__stiffness, b, rtol=self.__tol, maxiter=self.__max_iterations, M=self.__preconditioner)
        if info != 0:
            residual = float(np.linalg.norm(self.__stiffness @ u - b) / np.linalg.norm(b))
            raise SolverConvergenceError("Conjugate gradient did not converge after %s iterations" % info, residual)
        return u

    def solve(self, b):
        b = project_compatible(b, self.__lumped_mass)
        norm_b = np.linalg.norm(b)
        if norm_b == 0.0:
            return np.zeros_like(b)
        if self.__is_zero:
            raise SolverError("Neumann operator is identically zero but the load is not")

        u = self.__solve_direct(b) if self.__method == DIRECT else self.__solve_iterative(b)
        u = self.__zero_mean(u)

        residual = float(np.linalg.norm(self.__stiffness @ u - b) / norm_b)
        if not np.isfinite(residual):
            raise SolverError("Neumann solve produced non-finite values")
        if residual > self.__tol:
            log.warning("Neumann residual %.3e is above tolerance %.1e", residual, self.__tol)
        return u


def solve_neumann_zero_mean(stiffness, b, space, method=DIRECT, tol=1e-10):
    return NeumannSolver(stiffness, space.lumped_mass, method=method, tol=tol).solve(b)
