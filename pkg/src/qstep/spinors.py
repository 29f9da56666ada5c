"""Two-component quaternionic spinors and the piecewise wavefunction.

The incident spin is fixed to chi = (1, 0); with no spin flip only the
spin-up entries of the upper and lower Dirac bispinor survive.  In that
reduced basis ``(upper, lower)``::

    alpha_3 -> sigma_x = [[0, 1], [1, 0]]
    beta    -> sigma_z = [[1, 0], [0, -1]]

since sigma_3 chi = chi.  A spinor ``u + j w`` is stored as two complex
2-vectors; complex coefficients (R, T, exp(i Q z), ...) multiply from the
right, which for ``u + j w`` simply scales both ``u`` and ``w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import SingularDenominator
from .kinematics import Kinematics, StepPotential, phase
from .qalgebra import Quaternion

Pair = Tuple[complex, complex]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class QSpinor2:
    u: Pair = (0j, 0j)
    w: Pair = (0j, 0j)

    def __post_init__(self):
        object.__setattr__(self, "u", (complex(self.u[0]), complex(self.u[1])))
        object.__setattr__(self, "w", (complex(self.w[0]), complex(self.w[1])))

    def __add__(self, other: "QSpinor2") -> "QSpinor2":
        return QSpinor2(
            (self.u[0] + other.u[0], self.u[1] + other.u[1]),
            (self.w[0] + other.w[0], self.w[1] + other.w[1]),
        )

    def __sub__(self, other: "QSpinor2") -> "QSpinor2":
        return self + other.times(-1)

    def times(self, c: complex) -> "QSpinor2":
        """Right multiplication by a complex scalar."""
        return QSpinor2(
            (self.u[0] * c, self.u[1] * c),
            (self.w[0] * c, self.w[1] * c),
        )

    def component(self, i: int) -> Quaternion:
        return Quaternion(self.u[i], self.w[i])

    def components(self) -> Tuple[Quaternion, Quaternion]:
        return self.component(0), self.component(1)

    def norm2(self) -> float:
        return sum(abs(x) ** 2 for x in self.u + self.w)

    def max_abs(self) -> float:
        return max(abs(x) for x in self.u + self.w)

    def is_complex(self, tol: float = 0.0) -> bool:
        return max(abs(x) for x in self.w) <= tol

    def sandwich(self, matrix: Sequence[Sequence[complex]]) -> Quaternion:
        """Quaternionic ``Psi^dagger M Psi`` for a 2x2 complex matrix ``M``."""
        psi = self.components()
        out = Quaternion()
        for r in range(2):
            left = psi[r].conj()
            for c in range(2):
                if matrix[r][c] != 0:
                    out = out + left * Quaternion(matrix[r][c]) * psi[c]
        return out


@dataclass(frozen=True)
class ChannelCoeffs:
    A_plus: complex
    A_minus: complex
    M_plus: complex
    M_minus: complex
    N_plus: complex
    N_minus: complex


def _guarded(num: complex, den: complex, scale: float, what: str) -> complex:
    if abs(den) <= SINGULAR_RTOL * scale:
        raise SingularDenominator(f"{what} denominator {den!r} vanishes (scale {scale:.3g})")
    return num / den


def channel_coeffs(kin: Kinematics, pot: StepPotential) -> ChannelCoeffs:
    """Amplitude coefficients of the two transmitted channels.

    ``A`` fixes the lower component of the dominant part of each channel;
    ``M`` and ``N`` the small part induced by W0.  For W0 = 0 the ``M, N``
    terms never contribute and are returned as zero.
    """
    E, m, V0, d = kin.E, kin.m, pot.V0, kin.delta
    Qp, Qm = kin.Q_plus, kin.Q_minus
    shift = d / (E - m)
    scale_a = E + V0 + m + shift
    A_plus = _guarded(Qp, E + V0 + m + shift, scale_a, "A+")
    A_minus = _guarded(Qm, E - V0 + m - shift, scale_a, "A-")
    if pot.is_complex:
        return ChannelCoeffs(A_plus, A_minus, 0j, 0j, 0j, 0j)

    scale_q = (E + V0) ** 2 + m * m + pot.w_mag ** 2 + 2 * d
    den_p = kin.q_minus_sq - Qp * Qp
    den_m = kin.q_plus_sq - Qm * Qm
    M_plus = _guarded(Qp * A_plus + E - m - V0, den_p, scale_q, "M+/N+")
    N_plus = _guarded((E + m - V0) * A_plus + Qp, den_p, scale_q, "M+/N+")
    M_minus = _guarded(Qm * A_minus + E - m + V0, den_m, scale_q, "M-/N-")
    N_minus = _guarded((E + m + V0) * A_minus + Qm, den_m, scale_q, "M-/N-")
    return ChannelCoeffs(A_plus, A_minus, M_plus, M_minus, N_plus, N_minus)


def minus_channel(cc: ChannelCoeffs, pot: StepPotential) -> QSpinor2:
    """``(1, A-) - j W0 (M-, N-)``, the channel with momentum Q-."""
    W0 = pot.W0
    return QSpinor2((1, cc.A_minus), (-W0 * cc.M_minus, -W0 * cc.N_minus))


def plus_channel(cc: ChannelCoeffs, pot: StepPotential) -> QSpinor2:
    """``-W0* (N+, M+) + j (A+, 1)``, the channel with momentum Q+."""
    Wc = pot.W0.conjugate()
    return QSpinor2((-Wc * cc.N_plus, -Wc * cc.M_plus), (cc.A_plus, 1))


def incident(kin: Kinematics) -> QSpinor2:
    return QSpinor2((1, kin.a))


def reflected(kin: Kinematics) -> QSpinor2:
    return QSpinor2((1, -kin.a))


def reflected_j(kin: Kinematics) -> QSpinor2:
    return QSpinor2((0, 0), (-kin.a, 1))


def psi_region1(z: float, kin: Kinematics, R: complex, Rt: complex) -> QSpinor2:
    """Incident plus reflected waves for z <= 0."""
    fwd = phase(complex(kin.p), z)
    back = phase(complex(-kin.p), z)
    return (
        incident(kin).times(fwd)
        + reflected(kin).times(R * back)
        + reflected_j(kin).times(Rt * back)
    )


def psi_region2(
    z: float,
    kin: Kinematics,
    pot: StepPotential,
    cc: ChannelCoeffs,
    T: complex,
    Tt: complex,
) -> QSpinor2:
    """Transmitted waves for z >= 0; the tunneling Q- term decays."""
    out = QSpinor2()
    if T != 0:
        out = out + minus_channel(cc, pot).times(T * phase(kin.Q_minus, z))
    if Tt != 0:
        out = out + plus_channel(cc, pot).times(Tt * phase(kin.Q_plus, z))
    return out


def reduced_operators(E: float, Q: complex, m: float, V0: float):
    """The two 2x2 blocks ``(E - Q a3 - m b - V0, E - Q a3 + m b + V0)``."""
    L = E * IDENTITY - Q * SIGMA_X - m * SIGMA_Z - V0 * IDENTITY
    K = E * IDENTITY - Q * SIGMA_X + m * SIGMA_Z + V0 * IDENTITY
    return L, K


def eigen_residual(psi: QSpinor2, Q: complex, kin: Kinematics, pot: StepPotential) -> float:
    """Relative residual of the coupled equations for one plane-wave channel.

    Checks ``L u = -W0* w`` and ``K w = -W0 u`` with the reduced blocks.
    """
    L, K = reduced_operators(kin.E, Q, kin.m, pot.V0)
    u = np.array(psi.u)
    w = np.array(psi.w)
    W0 = pot.W0
    r1 = L @ u + W0.conjugate() * w
    r2 = K @ w + W0 * u
    scale = (kin.E + abs(Q) + kin.m + pot.V0 + pot.w_mag) * max(psi.max_abs(), 1e-300)
    return float(max(np.abs(r1).max(), np.abs(r2).max()) / scale)
