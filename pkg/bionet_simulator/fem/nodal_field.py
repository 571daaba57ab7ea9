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

SCALAR_LABELS = ('C',)
TENSOR_LABELS = ('C11', 'C12', 'C22')


class NodalField:
    """
    Values on the active nodes of a space, one column per component.
    Symmetric tensors are stored by their three independent entries C11, C12, C22.
    """

    def __init__(self, values, labels=None):
        values = np.array(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        self.__values = values
        if labels is None:
            labels = SCALAR_LABELS if values.shape[1] == 1 else TENSOR_LABELS
        if len(labels) != values.shape[1]:
            raise ValueError("Expected %i labels, got %i" % (values.shape[1], len(labels)))
        self.__labels = tuple(labels)

    @classmethod
    def scalar(cls, values, label='C'):
        return cls(np.asarray(values, dtype=float)[:, None], (label,))

    @classmethod
    def tensor(cls, c11, c12, c22):
        return cls(np.column_stack((c11, c12, c22)), TENSOR_LABELS)

    @classmethod
    def isotropic(cls, n_dofs, value, tensor_mode=True):
        if tensor_mode:
            return cls.tensor(np.full(n_dofs, value), np.zeros(n_dofs), np.full(n_dofs, value))
        return cls.scalar(np.full(n_dofs, value))

    @property
    def values(self):
        return self.__values

    @property
    def labels(self):
        return self.__labels

    @property
    def n_dofs(self):
        return self.__values.shape[0]

    @property
    def components(self):
        return self.__values.shape[1]

    @property
    def is_tensor(self):
        return self.components == 3

    def component(self, k):
        return self.__values[:, k]

    def copy(self):
        return NodalField(self.__values.copy(), self.__labels)

    def frobenius_norm(self):
        return frobenius_norm(self.__values)

    def min_eigenvalue(self):
        return float(np.min(min_eigenvalues(self.__values)))

    def max_abs_difference(self, other):
        return float(np.max(np.abs(self.__values - other.values))) if self.n_dofs else 0.0

    def has_non_finite(self):
        return not np.all(np.isfinite(self.__values))

    def __repr__(self):
        return "NodalField(labels=%s, n_dofs=%i)" % (",".join(self.__labels), self.n_dofs)


def frobenius_norm(values):
    """Norm of stored components, shape (..., 1) for scalars or (..., 3) for symmetric tensors."""
    values = np.asarray(values, dtype=float)
    if values.shape[-1] == 1:
        return np.abs(values[..., 0])
    c11, c12, c22 = values[..., 0], values[..., 1], values[..., 2]
    return np.sqrt(c11 * c11 + 2.0 * c12 * c12 + c22 * c22)


def min_eigenvalues(values):
    values = np.asarray(values, dtype=float)
    if values.shape[-1] == 1:
        return values[..., 0]
    c11, c12, c22 = values[..., 0], values[..., 1], values[..., 2]
    return 0.5 * (c11 + c22) - np.sqrt(0.25 * (c11 - c22) ** 2 + c12 * c12)
