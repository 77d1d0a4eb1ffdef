"""Spectral-singularity machinery for the quaternionic point interaction.

|D(beta)|^2 is a monic quartic in beta. A singularity is a positive real
double root of that quartic, which pins g^2 to one of two closed-form
branches in (v1, v2); this module carries the quartic coefficients, the
discriminant factorization, the root-nature classifier, the closed-form
branches and the (v1, v2) feasibility regions.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .scatter import DeltaPotential

# Lower bound of v1/v2 for singularity support at v2 > 0; root of k^2+6k+1=0.
KAPPA = -3.0 + 2.0 * math.sqrt(2.0)

# |delta| below this fraction of the largest discriminant monomial counts as
# the double-root boundary; large enough to absorb the cancellation noise of
# the 16-term expansion, small enough to keep e.g. (-10,35,-50,24) (delta=144,
# largest monomial ~1.7e8) classified as four distinct real roots.
BOUNDARY_DELTA_RTOL = 1e-9


@dataclass(frozen=True)
class QuarticCoeffs:
    """Coefficients of the monic quartic beta^4 + b beta^3 + c beta^2 + d beta + e."""

    b: float
    c: float
    d: float
    e: float

    def value_at(self, beta: float) -> float:
        return (((beta + self.b) * beta + self.c) * beta + self.d) * beta + self.e


def quartic_coeffs(p: DeltaPotential) -> QuarticCoeffs:
    """|D(beta)|^2 as a monic quartic in beta."""
    v1, v2, g2 = p.v1, p.v2, p.g_squared
    diff = v1 - v2
    b = 2.0 * diff
    c = 2.0 * (diff * diff)
    d = 2.0 * (g2 * (v1 + v2) + diff * (v1 * v1 + v2 * v2))
    e = g2 * g2 + 2.0 * g2 * (v1 * v1 - v2 * v2) + (v1 * v1 + v2 * v2) ** 2
    return QuarticCoeffs(b, c, d, e)


def _discriminant_terms(q: QuarticCoeffs) -> tuple[float, ...]:
    b, c, d, e = q.b, q.c, q.d, q.e
    return (
        256.0 * e ** 3,
        -192.0 * b * d * e ** 2,
        -128.0 * c ** 2 * e ** 2,
        144.0 * c * d ** 2 * e,
        -27.0 * d ** 4,
        144.0 * b ** 2 * c * e ** 2,
        -6.0 * b ** 2 * d ** 2 * e,
        -80.0 * b * c ** 2 * d * e,
        18.0 * b * c * d ** 3,
        16.0 * c ** 4 * e,
        -4.0 * c ** 3 * d ** 2,
        -27.0 * b ** 4 * e ** 2,
        18.0 * b ** 3 * c * d * e,
        -4.0 * b ** 3 * d ** 3,
        -4.0 * b ** 2 * c ** 3 * e,
        b ** 2 * c ** 2 * d ** 2,
    )


def discriminant_expanded(q: QuarticCoeffs) -> float:
    """Quartic discriminant evaluated literally from its 16-term expansion."""
    return math.fsum(_discriminant_terms(q))


def discriminant_factored(p: DeltaPotential) -> tuple[float, float, float]:
    """(A, B, 64*A*B): the discriminant factors over this potential family.

    A = [g^4 + g^2 (v1^2 - v2^2) - 2 v1 v2 (v1 + v2)^2]^2 is a square, and B
    as a quadratic in g^2 has discriminant -64 v1^2 v2^2 <= 0, so both factors
    and hence the discriminant are non-negative for every real input.
    """
    v1, v2, g2 = p.v1, p.v2, p.g_squared
    s = v1 + v2
    bracket = g2 * g2 + g2 * (v1 * v1 - v2 * v2) - 2.0 * v1 * v2 * s * s
    a_factor = bracket * bracket
    b_factor = 4.0 * g2 * g2 + 4.0 * g2 * (v1 * v1 - v2 * v2) + (v1 * v1 + v2 * v2) ** 2
    return a_factor, b_factor, 64.0 * a_factor * b_factor


def pq_classifiers(q: QuarticCoeffs) -> tuple[float, float]:
    """P = 8c - 3b^2 and Q = 64e - 16c^2 + 16b^2 c - 16bd - 3b^4."""
    b, c, d, e = q.b, q.c, q.d, q.e
    p_val = 8.0 * c - 3.0 * b * b
    q_val = 64.0 * e - 16.0 * c * c + 16.0 * b * b * c - 16.0 * b * d - 3.0 * b ** 4
    return p_val, q_val


def pq_simplified(p: DeltaPotential) -> tuple[float, float]:
    """P and Q reduced over this potential family; must match the raw forms."""
    v1, v2, g2 = p.v1, p.v2, p.g_squared
    p_val = 4.0 * (v1 - v2) ** 2
    q_val = 16.0 * (4.0 * g2 * g2 + 4.0 * g2 * (v1 * v1 - v2 * v2) + (v1 + v2) ** 4)
    return p_val, q_val


class RootNature(str, Enum):
    TWO_DISTINCT_REAL = "TwoDistinctReal"
    ALL_FOUR_REAL = "AllFourReal"
    NO_REAL = "NoReal"
    BOUNDARY_DOUBLE_ROOT = "BoundaryDoubleRoot"


def root_nature(q: QuarticCoeffs) -> RootNature:
    """Classify the real-root content of the quartic from its discriminant.

    The boundary verdict fires when the discriminant vanishes relative to its
    largest monomial; a non-negative quartic then has a real double root.
    """
    terms = _discriminant_terms(q)
    delta = math.fsum(terms)
    scale = max(1.0, max(abs(t) for t in terms))
    if abs(delta) <= BOUNDARY_DELTA_RTOL * scale:
        return RootNature.BOUNDARY_DOUBLE_ROOT
    if delta < 0.0:
        return RootNature.TWO_DISTINCT_REAL
    p_val, q_val = pq_classifiers(q)
    if p_val < 0.0 and q_val < 0.0:
        return RootNature.ALL_FOUR_REAL
    return RootNature.NO_REAL


@dataclass(frozen=True)
class QuarticAnalysis:
    """Coefficients, discriminant data and root-nature verdict in one record."""

    coeffs: QuarticCoeffs
    delta: float
    a_factor: float
    b_factor: float
    p_val: float
    q_val: float
    verdict: RootNature


def analyze_quartic(p: DeltaPotential) -> QuarticAnalysis:
    coeffs = quartic_coeffs(p)
    a_factor, b_factor, _ = discriminant_factored(p)
    p_val, q_val = pq_classifiers(coeffs)
    return QuarticAnalysis(coeffs, discriminant_expanded(coeffs), a_factor,
                           b_factor, p_val, q_val, root_nature(coeffs))


class Branch(str, Enum):
    PLUS = "plus"
    MINUS = "minus"


class Reason(str, Enum):
    OK = "OK"
    NEGATIVE_G_SQUARED = "NegativeGSquared"
    NON_POSITIVE_BETA = "NonPositiveBeta"
    COMPLEX_SQRT = "ComplexSqrt"
    DEGENERATE_SUM = "DegenerateSum"


@dataclass(frozen=True)
class SSBranchSolution:
    """One closed-form singularity branch; infeasibility is data, not an error."""

    branch: Branch
    g_squared: float
    beta: float
    energy: float
    feasible: bool
    reason: Reason


def ss_closed_form(v1: float, v2: float) -> tuple[SSBranchSolution, SSBranchSolution]:
    """Both closed-form singularity branches for strengths (v1, v2).

    For s in {+1, -1}:
        g_s^2  = -(v1 + v2) ((v1 - v2) + s sqrt((v1 + v2)^2 + 4 v1 v2)) / 2
        beta_s = -(v1 - v2) - g_s^2 / (v1 + v2),    E_s = beta_s^2 / 2
    and the branch is feasible iff g_s^2 > 0 and beta_s > 0. A vanishing
    v1 + v2 forces g = 0 and is reported as DegenerateSum rather than
    fabricating a branch; g^2 = 0 itself means no quaternionic j, k part and
    is reported as NegativeGSquared. Both feasibility comparisons carry a
    scaled guard band so that rounding noise exactly on a boundary (e.g.
    beta = 0 at v1 = 0, v2 < 0) cannot flip the classification.
    """
    scale = max(1.0, abs(v1), abs(v2))
    tol_degenerate = 1e-12 * scale
    s_sum = v1 + v2
    if abs(s_sum) <= tol_degenerate:
        return (
            SSBranchSolution(Branch.PLUS, math.nan, math.nan, math.nan,
                             False, Reason.DEGENERATE_SUM),
            SSBranchSolution(Branch.MINUS, math.nan, math.nan, math.nan,
                             False, Reason.DEGENERATE_SUM),
        )
    disc = s_sum * s_sum + 4.0 * v1 * v2
    if disc < 0.0:
        return (
            SSBranchSolution(Branch.PLUS, math.nan, math.nan, math.nan,
                             False, Reason.COMPLEX_SQRT),
            SSBranchSolution(Branch.MINUS, math.nan, math.nan, math.nan,
                             False, Reason.COMPLEX_SQRT),
        )
    root = math.sqrt(disc)
    solutions = []
    for branch, sign in ((Branch.PLUS, 1.0), (Branch.MINUS, -1.0)):
        g2 = -0.5 * s_sum * ((v1 - v2) + sign * root)
        beta = -(v1 - v2) - g2 / s_sum
        energy = 0.5 * beta * beta
        if g2 <= 1e-12 * scale * scale:
            reason, feasible = Reason.NEGATIVE_G_SQUARED, False
        elif beta <= 1e-12 * scale:
            reason, feasible = Reason.NON_POSITIVE_BETA, False
        else:
            reason, feasible = Reason.OK, True
        solutions.append(SSBranchSolution(branch, g2, beta, energy, feasible, reason))
    return solutions[0], solutions[1]


class RegionClass(str, Enum):
    BOTH_BRANCHES = "BothBranches"
    PLUS_ONLY = "PlusOnly"
    MINUS_ONLY = "MinusOnly"
    NONE = "None"


def classify_region(v1: float, v2: float) -> RegionClass:
    """Region label derived purely from the two branch feasibility flags."""
    plus, minus = ss_closed_form(v1, v2)
    if plus.feasible and minus.feasible:
        return RegionClass.BOTH_BRANCHES
    if plus.feasible:
        return RegionClass.PLUS_ONLY
    if minus.feasible:
        return RegionClass.MINUS_ONLY
    return RegionClass.NONE


@dataclass(frozen=True)
class ScanRow:
    v1: float
    v2: float
    classification: RegionClass
    e_plus: float | None
    e_minus: float | None


# Grids below this cell count are always scanned serially; forking workers
# costs more than the whole scan at desk scale.
_PARALLEL_MIN_CELLS = 4096


def worker_count() -> int:
    """Worker cap from QDELTA_THREADS, defaulting to all cores."""
    raw = os.environ.get("QDELTA_THREADS", "")
    if raw:
        try:
            n = int(raw)
        except ValueError as exc:
            raise ValueError("QDELTA_THREADS must be an integer") from exc
        if n < 1:
            raise ValueError("QDELTA_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


def _axis(lo: float, hi: float, n: int) -> list[float]:
    span = hi - lo
    vals = [lo + span * (i / (n - 1)) for i in range(n)]
    vals[-1] = hi
    return vals


def _scan_rows(v1_vals: list[float], v2_vals: list[float]) -> list[ScanRow]:
    rows = []
    for v1 in v1_vals:
        for v2 in v2_vals:
            plus, minus = ss_closed_form(v1, v2)
            rows.append(ScanRow(
                v1, v2, classify_region(v1, v2),
                plus.energy if plus.feasible else None,
                minus.energy if minus.feasible else None,
            ))
    return rows


def _scan_chunk(args: tuple[list[float], list[float]]) -> list[ScanRow]:
    return _scan_rows(*args)


def scan_region(v1_range: tuple[float, float], v2_range: tuple[float, float],
                n1: int, n2: int) -> list[ScanRow]:
    """Classify every cell of the (v1, v2) grid, row-major with v1 outermost."""
    if n1 < 2 or n2 < 2:
        raise ValueError("grid needs at least 2 points per axis")
    (v1_lo, v1_hi), (v2_lo, v2_hi) = v1_range, v2_range
    if not (v1_lo < v1_hi and v2_lo < v2_hi):
        raise ValueError("ranges must satisfy lo < hi")
    v1_vals = _axis(v1_lo, v1_hi, n1)
    v2_vals = _axis(v2_lo, v2_hi, n2)
    workers = min(worker_count(), n1)
    if workers > 1 and n1 * n2 >= _PARALLEL_MIN_CELLS:
        size = -(-n1 // workers)
        chunks = [v1_vals[i:i + size] for i in range(0, n1, size)]
        try:
            with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
                parts = list(pool.map(_scan_chunk, [(ch, v2_vals) for ch in chunks]))
        except OSError:
            return _scan_rows(v1_vals, v2_vals)
        return [row for part in parts for row in part]
    return _scan_rows(v1_vals, v2_vals)
