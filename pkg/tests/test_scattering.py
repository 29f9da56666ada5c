import math

import numpy as np
import pytest

from oracles import complex_step_amplitudes
from qstep import (
    PreconditionViolation,
    SingularDenominator,
    StepPotential,
    Zone,
    channel_coeffs,
    kinematics,
    zone_boundaries,
)
from qstep.scattering import (
    Method,
    matching_residual,
    matching_system,
    solve,
    solve_closed_form,
    solve_complex_limit,
    solve_linear_system,
    solve_pure_quaternionic,
)
from sampling import ZONES, random_point


def _setup(E, m, pot):
    k = kinematics(E, m, pot)
    return k, channel_coeffs(k, pot)


def _rel(x, y):
    x, y = np.array(x), np.array(y)
    return np.abs(x - y).max() / max(1.0, np.abs(y).max())


@pytest.mark.parametrize("zone", ZONES)
def test_closed_form_matches_linear_solve(zone):
    rng = np.random.default_rng(7 + ZONES.index(zone))
    for _ in range(400):
        E, pot = random_point(rng, zone)
        try:
            k, cc = _setup(E, 1.0, pot)
            a = solve_closed_form(k, pot, cc)
            b = solve_linear_system(k, pot, cc)
        except (SingularDenominator, ArithmeticError):
            continue
        assert _rel(a.as_tuple(), b.as_tuple()) < 1e-10
        assert a.method is Method.CLOSED_FORM and b.method is Method.LINEAR_SOLVE


def test_complex_limit_reference():
    k = kinematics(10, 1, StepPotential(3))
    sol = solve_complex_limit(k, 3)
    assert sol.R.real == pytest.approx(0.02175, abs=5e-6)
    assert sol.T.real == pytest.approx(1.02175, abs=5e-6)
    assert sol.R_tilde == 0 and sol.T_tilde == 0
    R, T, _ = complex_step_amplitudes(10, 1, 3)
    assert abs(sol.R - R) < 1e-14 and abs(sol.T - T) < 1e-14


def test_complex_limit_tunneling_total_reflection():
    for E in np.linspace(2.01, 3.99, 50):
        sol = solve_complex_limit(kinematics(E, 1, StepPotential(3)), 3)
        assert abs(sol.R) == pytest.approx(1, abs=1e-12)


def test_complex_limit_klein():
    sol = solve_complex_limit(kinematics(1.5, 1, StepPotential(3)), 3)
    assert abs(sol.R) > 1


def test_dispatch_w_zero_is_exactly_complex():
    pot = StepPotential(3)
    k, cc = _setup(6, 1, pot)
    sol = solve(k, pot, cc)
    assert sol.method is Method.COMPLEX_LIMIT
    assert sol.R_tilde == 0 and sol.T_tilde == 0


def test_linear_solve_at_w_zero_decouples():
    pot = StepPotential(3)
    k, cc = _setup(10, 1, pot)
    sol = solve_linear_system(k, pot, cc)
    ref = solve_complex_limit(k, 3)
    assert _rel(sol.as_tuple(), ref.as_tuple()) < 1e-14


@pytest.mark.parametrize("phi, Tt", [(0.0, 0.5), (math.pi / 2, 0.5j)])
def test_pure_quaternionic(phi, Tt):
    pot = StepPotential.from_polar(0, 2, phi)
    k, cc = _setup(3, 1, pot)
    sol = solve_pure_quaternionic(k, pot)
    assert (sol.R, sol.R_tilde, sol.T) == (0, 0, 0.5)
    assert sol.T_tilde == pytest.approx(Tt, abs=1e-16)
    lin = solve_linear_system(k, pot, cc)
    assert _rel(lin.as_tuple(), sol.as_tuple()) < 1e-14
    closed = solve_closed_form(k, pot, cc)
    assert _rel(closed.as_tuple(), sol.as_tuple()) < 1e-14


def test_pure_quaternionic_axis_inputs():
    assert solve_pure_quaternionic(kinematics(3, 1, StepPotential(0, 0, 2)), StepPotential(0, 0, 2)).T_tilde == 0.5
    pot = StepPotential(0, 2, 0)
    assert solve_pure_quaternionic(kinematics(3, 1, pot), pot).T_tilde == pytest.approx(0.5j, abs=1e-16)


def test_preconditions():
    pot = StepPotential(3, 0, 1)
    k, cc = _setup(5, 1, pot)
    with pytest.raises(PreconditionViolation):
        solve_pure_quaternionic(k, pot)
    with pytest.raises(PreconditionViolation):
        solve_pure_quaternionic(k, StepPotential(0))
    p0 = StepPotential(3)
    k0, cc0 = _setup(5, 1, p0)
    with pytest.raises(PreconditionViolation):
        solve_closed_form(k0, p0, cc0)


@pytest.mark.parametrize("zone", ZONES)
def test_matching_residual(zone):
    rng = np.random.default_rng(99 + ZONES.index(zone))
    for _ in range(300):
        E, pot = random_point(rng, zone)
        try:
            k, cc = _setup(E, 1.0, pot)
            sol = solve(k, pot, cc)
        except SingularDenominator:
            continue
        assert matching_residual(k, pot, cc, sol) < 1e-12


def test_matching_system_solution_substitutes():
    pot = StepPotential(3, 0.5, 2)
    k, cc = _setup(7, 1, pot)
    A, b = matching_system(k, pot, cc)
    x = np.array(solve_closed_form(k, pot, cc).as_tuple())
    assert np.abs(np.array(A, dtype=complex) @ x - np.array(b)).max() < 1e-13


def test_continuity_to_complex_limit():
    for E in np.linspace(1.05, 10, 120):
        kc = kinematics(E, 1, StepPotential(3))
        try:
            ref = solve_complex_limit(kc, 3)
        except SingularDenominator:
            continue
        pot = StepPotential(3, 0, 1e-6)
        k, cc = _setup(E, 1, pot)
        sol = solve_closed_form(k, pot, cc)
        assert abs(sol.R - ref.R) < 1e-4
        assert abs(sol.T - ref.T) < 1e-4


def test_weak_quaternionic_part_gives_small_j_amplitudes():
    V0 = 3.0
    for W in (0.05, 0.1, 0.2, 0.3):
        pot = StepPotential(V0, 0, W)
        klein, diffusion = zone_boundaries(1, pot)
        for E in np.linspace(1.01, 10, 300):
            # near an edge T itself passes through zero (or A- diverges), so
            # the comparison there is between two vanishing numbers
            if min(abs(E - klein), abs(E - diffusion)) < 0.1:
                continue
            k, cc = _setup(E, 1, pot)
            sol = solve(k, pot, cc)
            assert abs(sol.R_tilde) < abs(sol.R)
            assert abs(sol.T_tilde) < abs(sol.T)


def test_quaternionic_tunneling_is_not_total_reflection():
    for W in (1, 2, 3):
        pot = StepPotential(3, 0, W)
        klein, diffusion = zone_boundaries(1, pot)
        for E in np.linspace(max(klein, 1) + 1e-3, diffusion - 1e-3, 40):
            k, cc = _setup(E, 1, pot)
            assert k.zone is Zone.TUNNELING
            assert abs(solve(k, pot, cc).R) < 1


def test_solution_tuple_and_reflection():
    pot = StepPotential(0, 0, 1)
    sol = solve_pure_quaternionic(kinematics(2, 1, pot), pot)
    assert sol.as_tuple() == (0, 0, 0.5, 0.5)
    assert sol.reflection == 0
    assert str(sol.method) == "PureQuaternionic"
