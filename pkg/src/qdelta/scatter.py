"""Closed-form scattering amplitudes for the quaternionic point interaction.

The interaction strength has a complex i channel v1 + i*v2 plus real j and k
channels (cap_v2, cap_v3); the amplitudes depend on the latter two only
through g^2 = cap_v2^2 + cap_v3^2. Natural units hbar = m = 1 throughout, so
beta = sqrt(2 E) and E = beta^2 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qalg import Quaternion

# |D| below TOL_SINGULAR * max(1, beta^2) flags a spectral singularity instead
# of dividing; downstream serialization must stay parseable.
TOL_SINGULAR = 1e-10


@dataclass(frozen=True)
class DeltaPotential:
    """Strength parameters of the point interaction; g^2 is always derived."""

    v1: float
    v2: float
    cap_v2: float
    cap_v3: float

    @classmethod
    def from_g_squared(cls, v1: float, v2: float, g_squared: float) -> "DeltaPotential":
        """Build with j strength sqrt(g_squared) and no k strength."""
        if g_squared < 0.0:
            raise ValueError("g_squared must be non-negative")
        return cls(v1, v2, math.sqrt(g_squared), 0.0)

    @property
    def g_squared(self) -> float:
        return self.cap_v2 * self.cap_v2 + self.cap_v3 * self.cap_v3

    @property
    def v1_complex(self) -> complex:
        return complex(self.v1, self.v2)

    def as_quaternion(self) -> Quaternion:
        # i*(v1 + i*v2) = -v2 + v1*i, so the real-quaternion strength reads
        # -v2 + v1*i + cap_v2*j + cap_v3*k.
        return Quaternion(-self.v2, self.v1, self.cap_v2, self.cap_v3)


@dataclass(frozen=True)
class ScatteringResult:
    """Amplitudes and coefficients at one energy; r and t are None at a singularity."""

    energy: float
    beta: float
    r: complex | None
    t: complex | None
    big_r: float
    big_t: float
    d_value: complex
    at_singularity: bool


def beta_of_energy(energy: float) -> float:
    """Wave number beta = sqrt(2 E) for positive energy."""
    if energy <= 0.0:
        raise ValueError("energy must be positive")
    return math.sqrt(2.0 * energy)


def denominator(p: DeltaPotential, beta: float) -> complex:
    """The shared amplitude denominator D = beta(beta + V1) + i(V1^2 + g^2 + V1 beta)."""
    v1c = p.v1_complex
    return beta * (beta + v1c) + 1j * (v1c * v1c + p.g_squared + v1c * beta)


def dr_di(p: DeltaPotential, beta: float) -> tuple[float, float]:
    """Real and imaginary parts of the denominator in expanded real form."""
    d_r = beta * beta + beta * (p.v1 - p.v2) - 2.0 * p.v1 * p.v2
    d_i = p.v1 * p.v1 - p.v2 * p.v2 + beta * (p.v1 + p.v2) + p.g_squared
    return d_r, d_i


def amplitudes(p: DeltaPotential, energy: float) -> ScatteringResult:
    """Reflection and transmission at one energy from the closed forms."""
    beta = beta_of_energy(energy)
    v1c = p.v1_complex
    d = denominator(p, beta)
    if abs(d) < TOL_SINGULAR * max(1.0, beta * beta):
        return ScatteringResult(energy, beta, None, None, math.inf, math.inf, d, True)
    numer = v1c * v1c + p.g_squared + v1c * beta
    r = -1j * numer / d
    t = beta * (beta + v1c) / d
    return ScatteringResult(energy, beta, r, t, abs(r) ** 2, abs(t) ** 2, d, False)


def energy_grid(e_min: float, e_max: float, steps: int) -> list[float]:
    """Uniform grid over [e_min, e_max], endpoints included."""
    if not (0.0 < e_min < e_max):
        raise ValueError("need 0 < e_min < e_max")
    if steps < 2:
        raise ValueError("need at least two grid points")
    span = e_max - e_min
    grid = [e_min + span * (i / (steps - 1)) for i in range(steps)]
    grid[-1] = e_max
    return grid


def sweep(p: DeltaPotential, e_min: float, e_max: float, steps: int) -> list[ScatteringResult]:
    """Amplitudes on a uniform inclusive energy grid, in ascending order."""
    return [amplitudes(p, e) for e in energy_grid(e_min, e_max, steps)]
