import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdelta.qalg import Quaternion
from qdelta.scatter import (DeltaPotential, amplitudes, beta_of_energy,
                            denominator, dr_di, energy_grid, sweep)
from qdelta.singular import quartic_coeffs

FIG_POT = DeltaPotential.from_g_squared(-0.5, 3.0, 3.75)

strengths = st.floats(min_value=-10, max_value=10, allow_nan=False)
g_squares = st.floats(min_value=1e-6, max_value=100, allow_nan=False)
betas = st.floats(min_value=1e-3, max_value=20, allow_nan=False)


def test_beta_of_energy():
    assert beta_of_energy(2.0) == 2.0
    assert beta_of_energy(9 / 8) == 1.5
    with pytest.raises(ValueError):
        beta_of_energy(0.0)
    with pytest.raises(ValueError):
        beta_of_energy(-1.0)


def test_potential_construction():
    p = DeltaPotential.from_g_squared(1.0, -2.0, 9.0)
    assert p.cap_v2 == 3.0 and p.cap_v3 == 0.0
    assert p.g_squared == 9.0
    assert p.v1_complex == 1 - 2j
    with pytest.raises(ValueError):
        DeltaPotential.from_g_squared(0.0, 0.0, -1.0)


def test_as_quaternion_reads_i_v1():
    # i*(v1 + i*v2) = -v2 + v1*i
    p = DeltaPotential(-0.5, 3.0, 1.5, 2.0)
    assert p.as_quaternion() == Quaternion(-3.0, -0.5, 1.5, 2.0)


def test_denominator_examples():
    # exact g^2 = 1 via cap_v2 = 1
    p = DeltaPotential(1.0, 0.0, 1.0, 0.0)
    assert denominator(p, 1.0) == 2 + 3j
    assert abs(denominator(FIG_POT, 2.0)) <= 1e-13
    free = DeltaPotential(0.0, 0.0, 0.0, 0.0)
    for beta in (0.5, 1.0, 3.0):
        assert denominator(free, beta) == beta * beta


def test_dr_di_examples():
    p = DeltaPotential(1.0, 0.0, 1.0, 0.0)
    assert dr_di(p, 1.0) == (2.0, 3.0)
    d_r, d_i = dr_di(FIG_POT, 2.0)
    assert abs(d_r) <= 1e-13 and abs(d_i) <= 1e-13


@given(strengths, strengths, g_squares)
def test_dr_di_at_zero_beta(v1, v2, g2):
    p = DeltaPotential.from_g_squared(v1, v2, g2)
    d_r, d_i = dr_di(p, 0.0)
    assert d_r == -2.0 * v1 * v2
    assert d_i == v1 * v1 - v2 * v2 + p.g_squared


def test_amplitudes_free_particle_exact():
    free = DeltaPotential(0.0, 0.0, 0.0, 0.0)
    for energy in (0.1, 1.0, 7.3):
        res = amplitudes(free, energy)
        assert res.r == 0 and res.t == 1
        assert res.big_r == 0.0 and res.big_t == 1.0
        assert not res.at_singularity


def test_amplitudes_real_strength_example():
    p = DeltaPotential(1.0, 0.0, 1.0, 0.0)
    res = amplitudes(p, 0.5)
    assert abs(res.r - (-9 - 6j) / 13) <= 1e-15
    assert abs(res.t - (4 - 6j) / 13) <= 1e-15
    assert res.big_r == pytest.approx(9 / 13, abs=1e-14)
    assert res.big_t == pytest.approx(4 / 13, abs=1e-14)
    assert res.big_r + res.big_t == pytest.approx(1.0, abs=1e-12)


def test_amplitudes_flags_singularity():
    res = amplitudes(FIG_POT, 2.0)
    assert res.at_singularity
    assert res.r is None and res.t is None
    assert math.isinf(res.big_r) and math.isinf(res.big_t)


def test_sweep_shape_and_order():
    rows = sweep(FIG_POT, 0.05, 4.0, 400)
    assert len(rows) == 400
    assert rows[0].energy == 0.05 and rows[-1].energy == 4.0
    assert all(a.energy < b.energy for a, b in zip(rows, rows[1:]))


def test_sweep_free_rows():
    rows = sweep(DeltaPotential(0, 0, 0, 0), 1.0, 2.0, 2)
    assert [(r.r, r.t) for r in rows] == [(0, 1), (0, 1)]


def test_sweep_unitary_rows():
    p = DeltaPotential(1.0, 0.0, 1.0, 0.0)
    for res in sweep(p, 0.1, 10.0, 100):
        assert abs(res.big_r + res.big_t - 1.0) <= 1e-10


def test_energy_grid_validation():
    with pytest.raises(ValueError):
        energy_grid(2.0, 1.0, 10)
    with pytest.raises(ValueError):
        energy_grid(0.0, 1.0, 10)
    with pytest.raises(ValueError):
        energy_grid(1.0, 2.0, 1)


@given(strengths, strengths, g_squares, betas)
def test_denominator_decomposition(v1, v2, g2, beta):
    p = DeltaPotential.from_g_squared(v1, v2, g2)
    d_r, d_i = dr_di(p, beta)
    assert abs(denominator(p, beta) - complex(d_r, d_i)) <= 1e-12


@given(st.floats(min_value=-10, max_value=10, allow_nan=False), g_squares,
       st.floats(min_value=1e-2, max_value=200, allow_nan=False))
def test_unitarity_anti_hermitian(v1, g2, energy):
    res = amplitudes(DeltaPotential.from_g_squared(v1, 0.0, g2), energy)
    assert abs(res.big_r + res.big_t - 1.0) <= 1e-10


@given(strengths, strengths, g_squares, betas)
def test_dsq_equals_quartic(v1, v2, g2, beta):
    p = DeltaPotential.from_g_squared(v1, v2, g2)
    d = denominator(p, beta)
    dsq = d.real * d.real + d.imag * d.imag
    val = quartic_coeffs(p).value_at(beta)
    assert abs(dsq - val) <= 1e-9 * max(1.0, dsq, abs(val))


def test_random_draw_box_decomposition():
    rng = random.Random(99)
    for _ in range(2000):
        p = DeltaPotential.from_g_squared(rng.uniform(-10, 10),
                                          rng.uniform(-10, 10),
                                          rng.uniform(0.0, 100.0))
        beta = rng.uniform(1e-6, 20.0)
        d_r, d_i = dr_di(p, beta)
        assert abs(denominator(p, beta) - complex(d_r, d_i)) <= 1e-12
