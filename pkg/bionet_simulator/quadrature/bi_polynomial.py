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
from numpy.polynomial import polynomial
from scipy.signal import convolve2d


class BiPolynomial:
    """
    Polynomial in two variables, sum of c[a, b] * x**a * y**b.
    """

    def __init__(self, coefficients):
        self.__coefficients = np.atleast_2d(np.asarray(coefficients, dtype=float))

    @classmethod
    def from_factors(cls, x_coefficients, y_coefficients):
        return cls(np.outer(np.asarray(x_coefficients, dtype=float), np.asarray(y_coefficients, dtype=float)))

    @classmethod
    def constant(cls, value):
        return cls([[float(value)]])

    @classmethod
    def monomial(cls, a, b, scale=1.0):
        coefficients = np.zeros((a + 1, b + 1))
        coefficients[a, b] = scale
        return cls(coefficients)

    @property
    def coefficients(self):
        return self.__coefficients

    @property
    def shape(self):
        return self.__coefficients.shape

    def __call__(self, x, y):
        return polynomial.polyval2d(x, y, self.__coefficients)

    def __add__(self, other):
        if not isinstance(other, BiPolynomial):
            other = BiPolynomial.constant(other)
        rows = max(self.shape[0], other.shape[0])
        cols = max(self.shape[1], other.shape[1])
        total = np.zeros((rows, cols))
        total[:self.shape[0], :self.shape[1]] += self.__coefficients
        total[:other.shape[0], :other.shape[1]] += other.coefficients
        return BiPolynomial(total)

    __radd__ = __add__

    def __neg__(self):
        return BiPolynomial(-self.__coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPolynomial):
            return BiPolynomial(convolve2d(self.__coefficients, other.coefficients))
        return BiPolynomial(self.__coefficients * float(other))

    __rmul__ = __mul__

    def antiderivative_x(self):
        rows, cols = self.shape
        result = np.zeros((rows + 1, cols))
        result[1:, :] = self.__coefficients / np.arange(1, rows + 1)[:, None]
        return BiPolynomial(result)

    def derivative_x(self):
        if self.shape[0] == 1:
            return BiPolynomial(np.zeros((1, self.shape[1])))
        return BiPolynomial(self.__coefficients[1:, :] * np.arange(1, self.shape[0])[:, None])

    def derivative_y(self):
        if self.shape[1] == 1:
            return BiPolynomial(np.zeros((self.shape[0], 1)))
        return BiPolynomial(self.__coefficients[:, 1:] * np.arange(1, self.shape[1])[None, :])

    def __repr__(self):
        return "BiPolynomial(%s)" % np.array2string(self.__coefficients, separator=',')


def antiderivative_x(f):
    return f.antiderivative_x()
