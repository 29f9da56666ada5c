"""Group velocities and spin expectation values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionViolation
from .kinematics import Kinematics, StepPotential, phase, propagating
from .qalgebra import K, Quaternion
from .spinors import QSpinor2

#: Value of ``GroupVelocities.v_minus`` when the Q- channel is evanescent.
EVANESCENT = None

S_Z = ((0.5, 0.0), (0.0, -0.5))


@dataclass(frozen=True)
class GroupVelocities:
    v_in: float
    v_plus: float
    v_minus: Optional[float]

    @property
    def minus_evanescent(self) -> bool:
        return self.v_minus is EVANESCENT


def _velocity(Q: float, sign: int, kin: Kinematics, pot: StepPotential) -> float:
    E = kin.E
    X = pot.V0 ** 2 + pot.w_mag ** 2
    S = math.hypot(E * pot.V0, kin.p * pot.w_mag)
    if S == 0.0:
        return Q / E
    f = 1.0 + sign * X / S
    if f == 0.0:
        # only reachable at V0 = 0, p = |W0|, where Q- = 0 as well
        return kin.p / E
    return Q / (E * f)


def group_velocities(kin: Kinematics, pot: StepPotential) -> GroupVelocities:
    """``dE/dQ`` for the incident wave and both transmitted channels."""
    v_plus = _velocity(kin.Q_plus.real, +1, kin, pot)
    if propagating(kin.Q_minus):
        v_minus = _velocity(kin.Q_minus.real, -1, kin, pot)
    else:
        v_minus = EVANESCENT
    return GroupVelocities(kin.p / kin.E, v_plus, v_minus)


def _require_pure(pot: StepPotential) -> None:
    if not pot.is_pure_quaternionic:
        raise PreconditionViolation(
            f"needs a pure quaternionic step (V0 = 0, |W0| > 0), got {pot}"
        )


def transmitted_pure_q(z: float, kin: Kinematics, pot: StepPotential) -> QSpinor2:
    """Transmitted wave of a pure quaternionic step, z >= 0.

    The incident spinor ``(1, a) exp(ipz)`` rotated by
    ``[[cos, -k e^{i phi} sin], [-k e^{i phi} sin, cos]]`` at angle ``|W0| z``.
    """
    _require_pure(pot)
    angle = pot.w_mag * z
    c = Quaternion(math.cos(angle))
    s = -(K * Quaternion(pot.W0 / pot.w_mag)) * math.sin(angle)
    carrier = phase(complex(kin.p), z)
    v0 = Quaternion(carrier)
    v1 = Quaternion(kin.a * carrier)
    top = c * v0 + s * v1
    bottom = s * v0 + c * v1
    return QSpinor2((top.c1, bottom.c1), (top.c2, bottom.c2))


def spin_z_expectation(psi: QSpinor2, norm2: Optional[float] = None) -> float:
    """``Psi^dagger S_z Psi / norm2`` with ``S_z = diag(1, -1)/2`` on the reduced spinor."""
    value = psi.sandwich(S_Z).real
    return value / (psi.norm2() if norm2 is None else norm2)


def sz_mean_complex(kin: Kinematics) -> float:
    a2 = kin.a ** 2
    return (1 - a2) / (2 * (1 + a2))


def sz_mean_pure_q(z: float, kin: Kinematics, pot: StepPotential) -> float:
    """Spin oscillation ``(m/2E) cos(2 |W0| z)`` behind a pure quaternionic step."""
    _require_pure(pot)
    return kin.m / (2 * kin.E) * math.cos(2 * pot.w_mag * z)
