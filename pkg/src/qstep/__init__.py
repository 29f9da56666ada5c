"""Plane-wave Dirac scattering off a quaternionic potential step."""

from .conservation import FluxWeights, current_density, flux_balance, flux_weights
from .errors import (
    DomainError,
    PreconditionViolation,
    QStepError,
    SingularDenominator,
    SingularMatrix,
)
from .kinematics import (
    Kinematics,
    StepPotential,
    Zone,
    classify_zone,
    kinematics,
    momenta,
    zone_boundaries,
)
from .observables import (
    GroupVelocities,
    group_velocities,
    sz_mean_complex,
    sz_mean_pure_q,
    transmitted_pure_q,
)
from .qalgebra import Quaternion, qconj, qmul
from .scattering import (
    Method,
    ScatteringSolution,
    solve,
    solve_closed_form,
    solve_complex_limit,
    solve_linear_system,
    solve_pure_quaternionic,
)
from .spinors import ChannelCoeffs, QSpinor2, channel_coeffs, psi_region1, psi_region2

__version__ = "0.1.0"
