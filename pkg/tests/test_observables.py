import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import sandwich4, velocity_fd
from qstep import PreconditionViolation, StepPotential, Zone, channel_coeffs, kinematics, zone_boundaries
from qstep.observables import (
    S_Z,
    group_velocities,
    spin_z_expectation,
    sz_mean_complex,
    sz_mean_pure_q,
    transmitted_pure_q,
)
from qstep.scattering import solve_pure_quaternionic
from qstep.spinors import psi_region2
from sampling import ZONES, random_point


def _v_minus_negative(E, m, pot):
    v = group_velocities(kinematics(E, m, pot), pot).v_minus
    return v is not None and v < 0


def klein_sign_change(m, pot):
    """Bisect the last energy at which v- is a defined negative number."""
    lo, hi = m * (1 + 1e-9), zone_boundaries(m, pot)[1]
    assert _v_minus_negative(lo, m, pot) and not _v_minus_negative(hi, m, pot)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _v_minus_negative(mid, m, pot):
            lo = mid
        else:
            hi = mid
    return lo


@pytest.mark.parametrize("zone", [Zone.DIFFUSION, Zone.KLEIN])
def test_velocities_match_finite_differences(zone):
    rng = np.random.default_rng(17 + (zone is Zone.KLEIN))
    for _ in range(200):
        E, pot = random_point(rng, zone, edge_gap=0.05)
        k = kinematics(E, 1.0, pot)
        v = group_velocities(k, pot)
        assert v.v_plus == pytest.approx(velocity_fd(E, 1.0, pot.V0, pot.w_mag, +1), rel=1e-6)
        assert v.v_minus == pytest.approx(velocity_fd(E, 1.0, pot.V0, pot.w_mag, -1), rel=1e-6)


def test_plus_velocity_in_tunneling_zone():
    rng = np.random.default_rng(3)
    for _ in range(100):
        E, pot = random_point(rng, Zone.TUNNELING, edge_gap=0.05)
        v = group_velocities(kinematics(E, 1.0, pot), pot)
        assert v.minus_evanescent
        assert v.v_plus == pytest.approx(velocity_fd(E, 1.0, pot.V0, pot.w_mag, +1), rel=1e-6)


@given(st.floats(1.0001, 20), st.floats(0.01, 5), st.floats(-3, 3))
def test_pure_quaternionic_velocities(r, W, phi):
    pot = StepPotential.from_polar(0, W, phi)
    k = kinematics(r, 1.0, pot)
    v = group_velocities(k, pot)
    assert v.v_in == k.p / k.E
    assert abs(v.v_plus - v.v_in) <= 1e-12
    assert abs(v.v_minus - v.v_in) <= 1e-12
    assert abs(v.v_plus - v.v_minus) < 1e-12


def test_complex_step_velocity():
    k = kinematics(6, 1, StepPotential(3))
    v = group_velocities(k, StepPotential(3))
    q = math.sqrt(8)
    assert v.v_minus == pytest.approx(q / 3, rel=1e-14)
    assert v.v_minus == pytest.approx(velocity_fd(6, 1, 3, 0, -1), rel=1e-6)


def test_klein_velocity_negative():
    v = group_velocities(kinematics(1.5, 1, StepPotential(3)), StepPotential(3))
    assert v.v_minus < 0


def test_subluminal_incident():
    for E in (1.001, 2, 50):
        v = group_velocities(kinematics(E, 1, StepPotential(3, 0, 1)), StepPotential(3, 0, 1))
        assert 0 < v.v_in < 1


@pytest.mark.parametrize("W", [0.0, 0.5, 1.0, 2.0, 3.0])
def test_minus_velocity_changes_sign_at_klein_edge(W):
    pot = StepPotential(3, 0, W)
    edge = zone_boundaries(1, pot)[0]
    assert abs(klein_sign_change(1, pot) - edge) < 1e-8


@pytest.mark.parametrize("W", [1.0, 2.0, 3.0])
def test_plus_velocity_increases_with_energy(W):
    pot = StepPotential(3, 0, W)
    vs = [group_velocities(kinematics(E, 1, pot), pot).v_plus for E in np.linspace(1.0045, 10, 2000)]
    assert all(b > a for a, b in zip(vs, vs[1:]))


def test_transmitted_wave_is_the_region2_solution():
    pot = StepPotential.from_polar(0, 1.3, 0.7)
    k = kinematics(2.2, 1, pot)
    cc = channel_coeffs(k, pot)
    sol = solve_pure_quaternionic(k, pot)
    for z in np.linspace(0, 6, 13):
        a = transmitted_pure_q(z, k, pot)
        b = psi_region2(z, k, pot, cc, sol.T, sol.T_tilde)
        assert (a - b).max_abs() < 1e-12


def test_transmitted_wave_special_points():
    pot = StepPotential.from_polar(0, 2.0, 0.4)
    k = kinematics(3, 1, pot)
    psi = transmitted_pure_q(0.0, k, pot)
    assert psi.u == (1, k.a) and psi.w == (0, 0)
    assert psi.is_complex()
    psi = transmitted_pure_q(math.pi / 4, k, pot)  # |W0| z = pi/2
    assert max(abs(x) for x in psi.u) < 1e-15
    assert psi.norm2() == pytest.approx(1 + k.a ** 2, rel=1e-14)


@given(st.floats(0, 100), st.floats(1.001, 10), st.floats(0.01, 5), st.floats(-3, 3))
def test_transmitted_norm_is_constant(z, r, W, phi):
    pot = StepPotential.from_polar(0, W, phi)
    k = kinematics(r, 1.0, pot)
    assert transmitted_pure_q(z, k, pot).norm2() == pytest.approx(1 + k.a ** 2, rel=1e-13)


def test_sz_sandwich_matches_formula():
    rng = np.random.default_rng(2)
    sz4 = np.diag([0.5, 0, -0.5, 0])
    for _ in range(100):
        pot = StepPotential.from_polar(0, rng.uniform(0.1, 4), rng.uniform(-3, 3))
        k = kinematics(rng.uniform(1.01, 10), 1.0, pot)
        z = rng.uniform(0, 20)
        psi = transmitted_pure_q(z, k, pot)
        direct = spin_z_expectation(psi, 1 + k.a ** 2)
        assert direct == pytest.approx(sz_mean_pure_q(z, k, pot), abs=1e-12)
        full = sandwich4(psi.u, psi.w, sz4)
        assert full[0] / (1 + k.a ** 2) == pytest.approx(direct, abs=1e-12)
        assert np.abs(full[1:]).max() < 1e-12


def test_sz_special_points():
    pot = StepPotential(0, 0, 2)
    k = kinematics(3, 1, pot)
    assert sz_mean_pure_q(0, k, pot) == pytest.approx(1 / 6, rel=1e-15)
    assert sz_mean_pure_q(math.pi / 4, k, pot) == pytest.approx(-1 / 6, rel=1e-14)
    assert spin_z_expectation(transmitted_pure_q(0, k, pot)) == pytest.approx(1 / 6, rel=1e-14)


def test_sz_spatial_period():
    pot = StepPotential(0, 0, 1.7)
    k = kinematics(2.5, 1, pot)

    def f(z):
        return spin_z_expectation(transmitted_pure_q(z, k, pot))

    zeros = []
    zs = np.linspace(0, 6, 600)
    for z0, z1 in zip(zs, zs[1:]):
        if f(z0) * f(z1) < 0:
            lo, hi = z0, z1
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if f(lo) * f(mid) <= 0:
                    hi = mid
                else:
                    lo = mid
            zeros.append(0.5 * (lo + hi))
    period = 2 * np.mean(np.diff(zeros))
    assert period == pytest.approx(math.pi / 1.7, rel=1e-8)


def test_sz_complex():
    assert sz_mean_complex(kinematics(2, 1, StepPotential(0))) == pytest.approx(0.25, rel=1e-14)
    assert sz_mean_complex(kinematics(1 + 1e-12, 1, StepPotential(0))) == pytest.approx(0.5, rel=1e-10)
    for E in np.random.default_rng(0).uniform(1.0001, 100, 200):
        k = kinematics(E, 1, StepPotential(0))
        assert sz_mean_complex(k) == pytest.approx(1 / (2 * E), rel=1e-14)


def test_pure_only_observables_reject_complex_step():
    pot = StepPotential(3, 0, 1)
    k = kinematics(5, 1, pot)
    with pytest.raises(PreconditionViolation):
        transmitted_pure_q(0, k, pot)
    with pytest.raises(PreconditionViolation):
        sz_mean_pure_q(0, k, pot)


def test_sz_matrix_is_half_sigma_z():
    assert S_Z == ((0.5, 0.0), (0.0, -0.5))
