"""Quaternions in symplectic form.

A quaternion is held as a pair of complex numbers ``(c1, c2)`` standing for
``c1 + j*c2``.  Complex scalars are plain Python ``complex``.  Moving a
complex number through ``j`` conjugates it::

    z * j == j * conj(z)

which fixes the product law

    (a1 + j a2)(b1 + j b2) = (a1 b1 - conj(a2) b2) + j (conj(a1) b2 + a2 b1)

With this convention ``k = i*j = j*(-i)``, i.e. ``K == Quaternion(0, -1j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

Scalar = Union[int, float, complex]


@dataclass(frozen=True)
class Quaternion:
    c1: complex = 0j
    c2: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "c1", complex(self.c1))
        object.__setattr__(self, "c2", complex(self.c2))

    @classmethod
    def from_real4(cls, x0: float, x1: float, x2: float, x3: float) -> "Quaternion":
        """Build ``x0 + x1 i + x2 j + x3 k``."""
        # j*(s + i t) = s j - t k, hence c2 = x2 - i x3
        return cls(complex(x0, x1), complex(x2, -x3))

    def real4(self) -> Tuple[float, float, float, float]:
        """Components ``(x0, x1, x2, x3)`` on the basis ``1, i, j, k``."""
        return (self.c1.real, self.c1.imag, self.c2.real, -self.c2.imag)

    def __add__(self, other):
        other = as_quaternion(other)
        return Quaternion(self.c1 + other.c1, self.c2 + other.c2)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-as_quaternion(other))

    def __rsub__(self, other):
        return as_quaternion(other) - self

    def __mul__(self, other):
        return qmul(self, as_quaternion(other))

    def __rmul__(self, other):
        return qmul(as_quaternion(other), self)

    def conj(self) -> "Quaternion":
        return qconj(self)

    def norm2(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2

    def norm(self) -> float:
        return math.hypot(abs(self.c1), abs(self.c2))

    @property
    def real(self) -> float:
        return self.c1.real

    def is_complex(self, tol: float = 0.0) -> bool:
        return abs(self.c2) <= tol


def as_quaternion(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    return Quaternion(complex(x), 0j)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        a.c1 * b.c1 - a.c2.conjugate() * b.c2,
        a.c1.conjugate() * b.c2 + a.c2 * b.c1,
    )


def qconj(a: Quaternion) -> Quaternion:
    # conj(j c) = conj(c) conj(j) = -conj(c) j = -j c
    return Quaternion(a.c1.conjugate(), -a.c2)


def split(q: Quaternion) -> Tuple[complex, complex]:
    return q.c1, q.c2


def join(c1: Scalar, c2: Scalar) -> Quaternion:
    return Quaternion(c1, c2)


ONE = Quaternion(1, 0)
I = Quaternion(1j, 0)
J = Quaternion(0, 1)
K = Quaternion(0, -1j)
