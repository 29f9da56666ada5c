"""Probability current and the flux balance between the two regions.

For a stationary state ``d/dz (Psi^dagger alpha_3 Psi) = 0``.  Region I
carries ``2a (1 - |R|^2 - |R~|^2)`` and region II ``2a (rho |T|^2 + rho~ |T~|^2)``,
so the amplitudes obey

    |R|^2 + |R~|^2 + rho |T|^2 + rho~ |T~|^2 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import QStepError
from .kinematics import Kinematics, StepPotential, complex_momentum
from .scattering import ScatteringSolution
from .spinors import SIGMA_X, ChannelCoeffs, QSpinor2

NONREAL_RTOL = 1e-12


@dataclass(frozen=True)
class FluxWeights:
    rho: float
    rho_tilde: float


def flux_weights(cc: ChannelCoeffs, kin: Kinematics, pot: StepPotential) -> FluxWeights:
    W2 = pot.w_mag ** 2
    a = kin.a
    rho = (cc.A_minus + W2 * cc.M_minus.conjugate() * cc.N_minus).real / a
    rho_tilde = (cc.A_plus + W2 * cc.M_plus.conjugate() * cc.N_plus).real / a
    return FluxWeights(rho, rho_tilde)


def complex_flux_weight(kin: Kinematics, V0: float) -> float:
    """rho_c of the ordinary Dirac step; zero when q- is imaginary."""
    q = complex_momentum(kin)
    return (q + q.conjugate()).real * (kin.E + kin.m) / (2 * kin.p * (kin.E - V0 + kin.m))


def flux_balance(sol: ScatteringSolution, fw: FluxWeights) -> float:
    """Signed residual of the conservation identity."""
    return (
        abs(sol.R) ** 2
        + abs(sol.R_tilde) ** 2
        + fw.rho * abs(sol.T) ** 2
        + fw.rho_tilde * abs(sol.T_tilde) ** 2
        - 1.0
    )


def current_density(psi: QSpinor2) -> float:
    """z-component of the probability current, ``Psi^dagger alpha_3 Psi``.

    Evaluated as a full quaternionic sandwich; the i, j, k parts must vanish
    and only the real part is returned.  For the reduced spinor this equals
    ``2 Re(conj(u1) u2 + conj(w1) w2)``.
    """
    q = psi.sandwich(SIGMA_X)
    _, x1, x2, x3 = q.real4()
    if max(abs(x1), abs(x2), abs(x3)) > NONREAL_RTOL * max(psi.norm2(), 1e-300):
        raise QStepError(f"current density is not real: {q}")
    return q.real
