"""Real-quaternion arithmetic and its complex-pair decomposition.

The decomposition convention is fixed once here and used everywhere else:
q = z1 + j*z2 with z1 = w + x*i and z2 = y - z*i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Quaternion:
    """q = w + x*i + y*j + z*k with real components and Hamilton multiplication."""

    w: float
    x: float
    y: float
    z: float

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return qmul(self, other)

    def scaled(self, factor: float) -> "Quaternion":
        return Quaternion(factor * self.w, factor * self.x,
                          factor * self.y, factor * self.z)

    def conjugate(self) -> "Quaternion":
        return qconj(self)

    def norm(self) -> float:
        return math.sqrt(self.w * self.w + self.x * self.x
                         + self.y * self.y + self.z * self.z)

    __abs__ = norm


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q (non-commutative in general)."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def qconj(q: Quaternion) -> Quaternion:
    """Negate the i, j, k parts; q * qconj(q) equals |q|^2."""
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def embed_complex(zc: complex) -> Quaternion:
    """Embed a complex number in the (1, i) plane."""
    return Quaternion(zc.real, zc.imag, 0.0, 0.0)


def symplectic_split(q: Quaternion) -> tuple[complex, complex]:
    """Split q into (z1, z2) with q = z1 + j*z2, z1 = w + x*i, z2 = y - z*i."""
    return complex(q.w, q.x), complex(q.y, -q.z)


def symplectic_join(z1: complex, z2: complex) -> Quaternion:
    """Exact inverse of symplectic_split: z1 + j*z2 as a quaternion."""
    return Quaternion(z1.real, z1.imag, z2.real, -z2.imag)
