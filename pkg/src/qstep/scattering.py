"""Reflection and transmission amplitudes for the quaternionic step.

Unknowns are ordered ``(R, R~, T, T~)``.  Continuity of the wavefunction at
z = 0 gives four complex equations, two from the complex part and two from
the j part::

    (1, a) + (1, -a) R        = (1, A-) T - W0* (N+, M+) T~
    (-a, 1) R~                = -W0 (M-, N-) T + (A+, 1) T~
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .errors import PreconditionViolation, SingularDenominator
from .kinematics import Kinematics, StepPotential, complex_momentum
from .linsolve import checked_solve
from .spinors import SINGULAR_RTOL, ChannelCoeffs, psi_region1, psi_region2


class Method(str, Enum):
    CLOSED_FORM = "ClosedForm"
    LINEAR_SOLVE = "LinearSolve"
    COMPLEX_LIMIT = "ComplexLimit"
    PURE_QUATERNIONIC = "PureQuaternionic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ScatteringSolution:
    R: complex
    R_tilde: complex
    T: complex
    T_tilde: complex
    method: Method

    def as_tuple(self) -> Tuple[complex, complex, complex, complex]:
        return self.R, self.R_tilde, self.T, self.T_tilde

    @property
    def reflection(self) -> float:
        """Total reflected probability ``|R|^2 + |R~|^2``."""
        return abs(self.R) ** 2 + abs(self.R_tilde) ** 2


def _require_quaternionic(pot: StepPotential) -> None:
    if pot.is_complex:
        raise PreconditionViolation("closed form needs |W0| > 0; use solve_complex_limit")


def solve_closed_form(kin: Kinematics, pot: StepPotential, cc: ChannelCoeffs) -> ScatteringSolution:
    _require_quaternionic(pot)
    a = kin.a
    W0 = pot.W0
    W2 = pot.w_mag ** 2
    Ap, Am = cc.A_plus, cc.A_minus
    Mp, Mm, Np, Nm = cc.M_plus, cc.M_minus, cc.N_plus, cc.N_minus

    direct = (a + Am) * (a + Ap)
    coupling = W2 * (Mp + a * Np) * (Mm + a * Nm)
    den = direct - coupling
    if abs(den) <= SINGULAR_RTOL * (abs(direct) + abs(coupling)):
        raise SingularDenominator(f"matching determinant {den!r} vanishes")
    if abs(a + Ap) <= SINGULAR_RTOL * (a + abs(Ap)):
        raise SingularDenominator("a + A+ vanishes")

    T = 2 * a * (a + Ap) / den
    R = ((a - Am) * (a + Ap) + W2 * (Mp - a * Np) * (Mm + a * Nm)) / den
    R_tilde = W0 * (Mm - Ap * Nm) / (a + Ap) * T
    T_tilde = W0 * (Mm + a * Nm) / (a + Ap) * T
    return ScatteringSolution(R, R_tilde, T, T_tilde, Method.CLOSED_FORM)


def matching_system(kin: Kinematics, pot: StepPotential, cc: ChannelCoeffs):
    """Return ``(A, b)`` of the 4x4 matching system in ``(R, R~, T, T~)``."""
    a = kin.a
    W0 = pot.W0
    Wc = W0.conjugate()
    A = [
        [1, 0, -1, Wc * cc.N_plus],
        [-a, 0, -cc.A_minus, Wc * cc.M_plus],
        [0, -a, W0 * cc.M_minus, -cc.A_plus],
        [0, 1, W0 * cc.N_minus, -1],
    ]
    b = [-1, -a, 0, 0]
    return A, b


def solve_linear_system(kin: Kinematics, pot: StepPotential, cc: ChannelCoeffs) -> ScatteringSolution:
    A, b = matching_system(kin, pot, cc)
    R, R_tilde, T, T_tilde = checked_solve(A, b)
    return ScatteringSolution(R, R_tilde, T, T_tilde, Method.LINEAR_SOLVE)


def solve_complex_limit(kin: Kinematics, V0: float) -> ScatteringSolution:
    """Standard Dirac step amplitudes (W0 = 0); R~ = T~ = 0."""
    E, m, p = kin.E, kin.m, kin.p
    q = complex_momentum(kin)
    direct = p * (E - V0 + m)
    back = q * (E + m)
    den = direct + back
    if abs(den) <= SINGULAR_RTOL * (abs(direct) + abs(back)):
        raise SingularDenominator("complex-limit denominator vanishes")
    return ScatteringSolution((direct - back) / den, 0j, 2 * direct / den, 0j, Method.COMPLEX_LIMIT)


def solve_pure_quaternionic(kin: Kinematics, pot: StepPotential) -> ScatteringSolution:
    """V0 = 0: no reflection in either channel, T = 1/2, T~ = exp(i phi)/2."""
    if pot.V0 != 0.0:
        raise PreconditionViolation(f"pure quaternionic step needs V0 = 0, got {pot.V0!r}")
    if pot.is_complex:
        raise PreconditionViolation("pure quaternionic step needs |W0| > 0")
    return ScatteringSolution(0j, 0j, 0.5 + 0j, pot.W0 / (2 * pot.w_mag), Method.PURE_QUATERNIONIC)


def solve(kin: Kinematics, pot: StepPotential, cc: ChannelCoeffs) -> ScatteringSolution:
    """Pick the exact special case when one applies, else the closed form."""
    if pot.is_complex:
        return solve_complex_limit(kin, pot.V0)
    if pot.V0 == 0.0:
        return solve_pure_quaternionic(kin, pot)
    return solve_closed_form(kin, pot, cc)


def matching_residual(
    kin: Kinematics, pot: StepPotential, cc: ChannelCoeffs, sol: ScatteringSolution
) -> float:
    """``max|Psi_I(0) - Psi_II(0)|`` relative to the largest amplitude involved."""
    left = psi_region1(0.0, kin, sol.R, sol.R_tilde)
    right = psi_region2(0.0, kin, pot, cc, sol.T, sol.T_tilde)
    scale = max(1.0, left.max_abs(), right.max_abs())
    return (left - right).max_abs() / scale
