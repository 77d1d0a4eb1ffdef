"""Independent numerical cross-checks for the closed forms.

Three oracles, none of which reuses the closed-form amplitude or branch
expressions: a general quartic root solver, a direct minimiser of |D(beta)|^2,
and a first-principles matching-condition solver that assembles the junction
conditions as a 4x4 complex linear system via the complex-pair split of the
wave function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qalg import symplectic_split
from .scatter import DeltaPotential, beta_of_energy, denominator
from .singular import QuarticCoeffs


class NumericalError(RuntimeError):
    """A numerical routine failed to reach its required accuracy."""


DK_MAX_ITER = 500
DK_STEP_TOL = 1e-13
CLUSTER_RTOL = 1e-6
REAL_TAG_RTOL = 1e-8
_RECONSTRUCT_GUARD = 1e-6


@dataclass(frozen=True)
class RootSet:
    """All four quartic roots, with multiplicity tags from cluster detection.

    Clustered roots are replaced by their cluster centroid, so a double root
    appears twice with identical value and tag 2.
    """

    roots: tuple[complex, complex, complex, complex]
    multiplicity_tags: tuple[int, int, int, int]
    converged: bool

    def real_roots(self) -> list[float]:
        return [r.real for r in self.roots if r.imag == 0.0]


def _poly_val(b: float, c: float, d: float, e: float, z: complex) -> complex:
    return (((z + b) * z + c) * z + d) * z + e


# Non-real, pairwise distinct, and not closed under conjugation: a
# conjugate-closed start set locks the iteration in a symmetric subspace
# that has no fixed point when all four roots are real and simple.
_DK_SEED = complex(0.4, 0.9)


def _durand_kerner(b: float, c: float, d: float, e: float) -> list[complex] | None:
    radius = 1.0 + max(abs(b), abs(c), abs(d), abs(e))
    z = [radius * _DK_SEED ** (k + 1) for k in range(4)]
    for _ in range(DK_MAX_ITER):
        step = 0.0
        for k in range(4):
            den = 1.0 + 0.0j
            for j in range(4):
                if j != k:
                    den *= z[k] - z[j]
            if den == 0:
                return None
            w = _poly_val(b, c, d, e, z[k]) / den
            z[k] -= w
            step = max(step, abs(w))
        if step <= DK_STEP_TOL * max(1.0, max(abs(x) for x in z)):
            return z
    return None


def _companion_roots(b: float, c: float, d: float, e: float) -> list[complex]:
    comp = np.array([
        [0.0, 0.0, 0.0, -e],
        [1.0, 0.0, 0.0, -d],
        [0.0, 1.0, 0.0, -c],
        [0.0, 0.0, 1.0, -b],
    ])
    return [complex(z) for z in np.linalg.eigvals(comp)]


def _cluster(roots: list[complex]) -> list[tuple[complex, int]]:
    """Group roots closer than CLUSTER_RTOL * scale and take cluster centroids."""
    clusters: list[list[complex]] = []
    for z in sorted(roots, key=lambda r: (r.real, r.imag)):
        for members in clusters:
            tol = CLUSTER_RTOL * max(1.0, abs(members[0]))
            if abs(z - members[0]) <= tol:
                members.append(z)
                break
        else:
            clusters.append([z])
    return [(sum(ms) / len(ms), len(ms)) for ms in clusters]


def _tag_real(clusters: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    out = []
    for z, n in clusters:
        if abs(z.imag) <= REAL_TAG_RTOL * max(1.0, abs(z.real)):
            z = complex(z.real, 0.0)
        out.append((z, n))
    return out


def _pair_conjugates(clusters: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    """Force strictly complex roots into exact conjugate pairs."""
    real_part = [(z, n) for z, n in clusters if z.imag == 0.0]
    upper = [(z, n) for z, n in clusters if z.imag > 0.0]
    lower = [(z, n) for z, n in clusters if z.imag < 0.0]
    paired: list[tuple[complex, int]] = []
    for z, n in upper:
        if not lower:
            paired.append((complex(z.real, 0.0), n))
            continue
        k = min(range(len(lower)), key=lambda i: abs(z - lower[i][0].conjugate()))
        w, m = lower.pop(k)
        mean = (z + w.conjugate()) / 2.0
        paired.append((mean, n))
        paired.append((mean.conjugate(), m))
    for z, n in lower:
        paired.append((complex(z.real, 0.0), n))
    return real_part + paired


def _reconstruct_coeffs(roots: tuple[complex, ...]) -> tuple[complex, complex, complex, complex]:
    r1, r2, r3, r4 = roots
    b = -(r1 + r2 + r3 + r4)
    c = r1 * r2 + r1 * r3 + r1 * r4 + r2 * r3 + r2 * r4 + r3 * r4
    d = -(r1 * r2 * r3 + r1 * r2 * r4 + r1 * r3 * r4 + r2 * r3 * r4)
    e = r1 * r2 * r3 * r4
    return b, c, d, e


def quartic_roots(q: QuarticCoeffs) -> RootSet:
    """All four roots of the monic quartic, via simultaneous iteration.

    Falls back to companion-matrix eigenvalues when the iteration stalls
    (double roots rattle at the sqrt(eps) noise floor and never meet the step
    criterion). Either way the result is clustered into multiplicity tags,
    real-tagged, conjugate-symmetrised and checked by re-expansion.
    """
    b, c, d, e = q.b, q.c, q.d, q.e
    if not all(math.isfinite(x) for x in (b, c, d, e)):
        raise ValueError("coefficients must be finite")
    found = _durand_kerner(b, c, d, e)
    if found is None:
        found = _companion_roots(b, c, d, e)
    clusters = _pair_conjugates(_tag_real(_cluster(found)))
    expanded = sorted(
        ((z, n) for z, n in clusters for _ in range(n)),
        key=lambda item: (item[0].real, item[0].imag),
    )
    roots = tuple(z for z, _ in expanded)
    tags = tuple(n for _, n in expanded)
    rb, rc, rd, re_ = _reconstruct_coeffs(roots)
    scale = max(1.0, abs(b), abs(c), abs(d), abs(e),
                max(abs(z) for z in roots) ** 4)
    for got, want in ((rb, b), (rc, c), (rd, d), (re_, e)):
        if abs(got - want) > _RECONSTRUCT_GUARD * scale:
            raise NumericalError("root set fails to reconstruct the quartic")
    return RootSet(roots, tags, True)


_GRID_POINTS = 10_000
_REFINE_WIDTH = 1e-12
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def default_beta_max(p: DeltaPotential) -> float:
    return 10.0 * (1.0 + max(abs(p.v1), abs(p.v2), math.sqrt(p.g_squared)))


def minimize_dsq(p: DeltaPotential, beta_max: float | None = None) -> tuple[float, float]:
    """Global minimum of |D(beta)|^2 over (0, beta_max].

    Dense grid first (the quartic has at most two interior minima, which a
    10^4-point grid cannot miss at this scale), then golden-section refinement
    of the best bracket down to width 1e-12.
    """
    if beta_max is None:
        beta_max = default_beta_max(p)
    if beta_max <= 0.0:
        raise ValueError("beta_max must be positive")

    def dsq(beta: float) -> float:
        d = denominator(p, beta)
        return d.real * d.real + d.imag * d.imag

    xs = [beta_max * (i + 1) / _GRID_POINTS for i in range(_GRID_POINTS)]
    vals = [dsq(x) for x in xs]
    k = min(range(_GRID_POINTS), key=vals.__getitem__)
    lo = xs[k - 1] if k > 0 else xs[0] / 2.0
    hi = xs[k + 1] if k + 1 < _GRID_POINTS else beta_max
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = dsq(x1), dsq(x2)
    while hi - lo > _REFINE_WIDTH:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = dsq(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = dsq(x2)
    best = min((vals[k], xs[k]), (f1, x1), (f2, x2))
    return best[1], best[0]


class MatchMode(str, Enum):
    CONJUGATE = "Conjugate"
    CONTINUED = "Continued"


MATCH_SINGULAR_TOL = 1e-10


@dataclass(frozen=True)
class MatchingAmplitudes:
    """Solution of the four junction conditions; amplitudes are None when the
    system is singular. det_mag is the magnitude of the system determinant."""

    r: complex | None
    t: complex | None
    r_tilde: complex | None
    t_tilde: complex | None
    mode: MatchMode
    singular_system: bool
    det_mag: float


def matching_solver(p: DeltaPotential, energy: float, mode: MatchMode) -> MatchingAmplitudes:
    """Solve the junction conditions at the interaction point from scratch.

    The wave function splits into complex channels psi = psi1 + j*psi2 with
    the scattering ansatz

        psi1 = exp(i beta x) + r exp(-i beta x)  (x < 0),   t exp(i beta x)   (x > 0)
        psi2 = rt exp(beta x)                    (x < 0),   tt exp(-beta x)   (x > 0)

    (the j channel carries the opposite effective energy, hence evanescent).
    Continuity of both channels plus the derivative-jump conditions

        (1/2) d psi1' = V1 psi1(0) - (V3 - i V2) psi2(0)
        (1/2) d psi2' = cj psi2(0) + (V3 + i V2) psi1(0)

    close a 4x4 complex linear system over (r, t, rt, tt), assembled and
    solved numerically. Conjugate mode takes cj = conj(V1), the literal
    real-quaternion interaction; Continued mode takes cj = V1, the analytic
    continuation that the closed-form amplitudes solve exactly.
    """
    beta = beta_of_energy(energy)
    a_ch, b_ch = symplectic_split(p.as_quaternion())
    v1c = -1j * a_ch               # i-channel strength v1 + i v2
    c12 = -1j * b_ch.conjugate()   # j-wave drive felt by the i channel: V3 - i V2
    c21 = 1j * b_ch                # i-wave drive felt by the j channel: V3 + i V2
    cj = v1c.conjugate() if mode is MatchMode.CONJUGATE else v1c
    half_b = 0.5 * beta
    system = np.array([
        [1.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, -1.0],
        [1j * half_b, 1j * half_b - v1c, 0.0, c12],
        [0.0, c21, half_b, half_b + cj],
    ], dtype=complex)
    rhs = np.array([-1.0, 0.0, 1j * half_b, 0.0], dtype=complex)
    det_mag = abs(np.linalg.det(system))
    if det_mag < MATCH_SINGULAR_TOL * max(1.0, beta * beta):
        return MatchingAmplitudes(None, None, None, None, mode, True, det_mag)
    r, t, rt, tt = (complex(z) for z in np.linalg.solve(system, rhs))
    return MatchingAmplitudes(r, t, rt, tt, mode, False, det_mag)


def potential_from_ss_pairs(pair_a: tuple[float, float], pair_b: tuple[float, float],
                            tol: float = 1e-9) -> tuple[float, float]:
    """Recover (v1, v2) from two observed singularity pairs (g^2, beta).

    The real-part condition beta^2 + beta(v1 - v2) - 2 v1 v2 = 0 at the two
    betas is linear in (v1 - v2, v1 v2); the imaginary-part conditions then
    disambiguate the two factorizations of that pair. Raises NumericalError
    when no candidate satisfies all four conditions.
    """
    (g2_a, beta_a), (g2_b, beta_b) = pair_a, pair_b
    coef = np.array([[beta_a, -2.0], [beta_b, -2.0]])
    rhs = np.array([-beta_a * beta_a, -beta_b * beta_b])
    diff, prod = (float(x) for x in np.linalg.solve(coef, rhs))
    disc = diff * diff + 4.0 * prod
    if disc < 0.0:
        raise NumericalError("no real strength pair reproduces the inputs")
    root = math.sqrt(disc)
    best: tuple[float, float, float] | None = None
    for v2 in ((-diff + root) / 2.0, (-diff - root) / 2.0):
        v1 = v2 + diff
        resid = 0.0
        for g2, beta in (pair_a, pair_b):
            d_r = beta * beta + beta * (v1 - v2) - 2.0 * v1 * v2
            d_i = v1 * v1 - v2 * v2 + beta * (v1 + v2) + g2
            resid = max(resid, abs(d_r), abs(d_i))
        if best is None or resid < best[0]:
            best = (resid, v1, v2)
    assert best is not None
    scale = max(1.0, beta_a * beta_a, beta_b * beta_b, abs(g2_a), abs(g2_b))
    if best[0] > tol * scale:
        raise NumericalError("inputs are inconsistent with a single strength pair")
    return best[1], best[2]
