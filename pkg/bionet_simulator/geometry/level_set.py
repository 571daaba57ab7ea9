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
from math import cos, sin

import numpy as np

DEFAULT_PIVOT = (0.5, 0.5)


class DomainType(Enum):
    CIRCLE = 'circle'
    LEAF = 'leaf'
    ROTATED_LEAF = 'rotated_leaf'

    @classmethod
    def from_name(cls, name):
        for member in cls:
            if member.value == str(name).strip().lower():
                return member
        raise ValueError("Unknown domain '%s'" % name)


def rotate_point(x, y, theta, pivot=DEFAULT_PIVOT):
    """Counterclockwise rotation by theta about pivot. Works elementwise on arrays."""
    dx = np.asarray(x, dtype=float) - pivot[0]
    dy = np.asarray(y, dtype=float) - pivot[1]
    c, s = cos(theta), sin(theta)
    return pivot[0] + dx * c - dy * s, pivot[1] + dx * s + dy * c


class LevelSet:
    """
    Signed function describing a domain: negative inside, zero on the boundary.
    The leaf is the intersection of two discs, so its function is the maximum
    of the two disc functions.
    """

    def __init__(self, variant, centers, radius, angle=0.0, pivot=DEFAULT_PIVOT):
        if radius <= 0:
            raise ValueError("Radius must be positive, got %r" % radius)
        self.__variant = variant
        self.__radius = float(radius)
        self.__angle = float(angle)
        self.__pivot = tuple(pivot)
        self.__base_centers = tuple((float(cx), float(cy)) for cx, cy in centers)
        if variant == DomainType.CIRCLE and len(self.__base_centers) != 1:
            raise ValueError("Circle needs exactly one center")
        if variant != DomainType.CIRCLE and len(self.__base_centers) != 2:
            raise ValueError("Leaf needs exactly two centers")
        self.__centers = tuple(tuple(float(v) for v in rotate_point(cx, cy, self.__angle, self.__pivot))
                               for cx, cy in self.__base_centers)

    @classmethod
    def circle(cls, center=(0.5, 0.5), radius=0.45):
        return cls(DomainType.CIRCLE, (center,), radius)

    @classmethod
    def leaf(cls, first_center=(0.4, 0.5), second_center=(0.6, 0.5), radius=0.4):
        return cls(DomainType.LEAF, (first_center, second_center), radius)

    @classmethod
    def rotated_leaf(cls, theta, first_center=(0.4, 0.5), second_center=(0.6, 0.5), radius=0.4,
                     pivot=DEFAULT_PIVOT):
        """
        Leaf turned counterclockwise by theta about pivot, by default the square center (0.5, 0.5).
        The default leaf lies within 0.39 of that point, so every rotation stays inside the unit square.
        """
        return cls(DomainType.ROTATED_LEAF, (first_center, second_center), radius, angle=theta, pivot=pivot)

    @classmethod
    def from_domain(cls, domain, theta=0.0):
        if not isinstance(domain, DomainType):
            domain = DomainType.from_name(domain)
        if domain == DomainType.CIRCLE:
            return cls.circle()
        if domain == DomainType.LEAF:
            return cls.leaf()
        return cls.rotated_leaf(theta)

    @property
    def variant(self):
        return self.__variant

    @property
    def centers(self):
        return self.__centers

    @property
    def radius(self):
        return self.__radius

    @property
    def angle(self):
        return self.__angle

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        values = None
        for cx, cy in self.__centers:
            disc = np.hypot(x - cx, y - cy) - self.__radius
            values = disc if values is None else np.maximum(values, disc)
        return values

    def exact_area(self):
        r = self.__radius
        if self.__variant == DomainType.CIRCLE:
            return np.pi * r * r
        (x1, y1), (x2, y2) = self.__base_centers
        d = float(np.hypot(x2 - x1, y2 - y1))
        if d >= 2 * r:
            return 0.0
        return 2 * r * r * np.arccos(d / (2 * r)) - 0.5 * d * np.sqrt(4 * r * r - d * d)

    def outward_normal(self, x, y, step=1e-7):
        gx = (self(x + step, y) - self(x - step, y)) / (2 * step)
        gy = (self(x, y + step) - self(x, y - step)) / (2 * step)
        norm = np.hypot(gx, gy)
        return gx / norm, gy / norm

    def describe(self):
        centers = ";".join("%r,%r" % c for c in self.__centers)
        return "%s(centers=%s;radius=%r;theta=%r)" % (self.__variant.value, centers, self.__radius, self.__angle)

    def __repr__(self):
        return "LevelSet<%s>" % self.describe()


def eval_level_set(level_set, x, y):
    return float(level_set(x, y))


def eval_level_set_grid(level_set, n):
    """Values on the (n+1) x (n+1) lattice, indexed [j, i] with x = i/n and y = j/n."""
    coordinates = np.arange(n + 1) / n
    xs, ys = np.meshgrid(coordinates, coordinates)
    return np.asarray(level_set(xs, ys), dtype=float)
