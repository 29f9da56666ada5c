"""Momenta and energy zones for the quaternionic step.

Natural units (hbar = c = 1).  The step is ``i V0 + j V1 + k V2`` for z > 0;
its quaternionic part is summarised by the complex number
``W0 = V2 + i V1 = |W0| exp(i phi)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .errors import DomainError


class Zone(str, Enum):
    DIFFUSION = "Diffusion"
    TUNNELING = "Tunneling"
    KLEIN = "Klein"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class StepPotential:
    V0: float
    V1: float = 0.0
    V2: float = 0.0

    def __post_init__(self):
        for name in ("V0", "V1", "V2"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if self.V0 < 0:
            raise DomainError(f"V0 must be >= 0, got {self.V0!r}")

    @classmethod
    def from_polar(cls, V0: float, w_mag: float, phi: float = 0.0) -> "StepPotential":
        if w_mag < 0:
            raise DomainError(f"|W0| must be >= 0, got {w_mag!r}")
        if phi == 0.0:
            return cls(V0, 0.0, float(w_mag))
        return cls(V0, w_mag * math.sin(phi), w_mag * math.cos(phi))

    @property
    def W0(self) -> complex:
        return complex(self.V2, self.V1)

    @property
    def w_mag(self) -> float:
        return math.hypot(self.V1, self.V2)

    @property
    def phi(self) -> float:
        return math.atan2(self.V1, self.V2)

    @property
    def is_complex(self) -> bool:
        return self.V1 == 0.0 and self.V2 == 0.0

    @property
    def is_pure_quaternionic(self) -> bool:
        return self.V0 == 0.0 and not self.is_complex


@dataclass(frozen=True)
class Kinematics:
    E: float
    m: float
    p: float
    a: float
    q_plus_sq: float
    q_minus_sq: float
    delta: float
    Q_plus_sq: float
    Q_minus_sq: float
    Q_plus: complex
    Q_minus: complex
    zone: Zone


def principal_momentum(Q2: float) -> complex:
    """Real root for Q2 >= 0, ``+i sqrt(-Q2)`` otherwise (decays for z > 0)."""
    if Q2 >= 0:
        return complex(math.sqrt(Q2), 0.0)
    return complex(0.0, math.sqrt(-Q2))


def _check(E: float, m: float) -> None:
    if not (math.isfinite(E) and math.isfinite(m)):
        raise DomainError(f"E and m must be finite, got E={E!r}, m={m!r}")
    if m <= 0:
        raise DomainError(f"mass must be positive, got m={m!r}")
    if E <= m:
        raise DomainError(f"need E > m for a propagating incident wave, got E={E!r}, m={m!r}")


def kinematics(E: float, m: float, pot: StepPotential) -> Kinematics:
    _check(E, m)
    V0 = pot.V0
    W = pot.w_mag
    p = math.sqrt((E - m) * (E + m))
    a = p / (E + m)
    q_plus_sq = (E + V0) ** 2 - m * m
    q_minus_sq = (E - V0) ** 2 - m * m
    # sqrt((E V0)^2 + (p W)^2) - E V0, rearranged to avoid cancellation
    pw = p * W
    delta = pw * pw / (math.hypot(E * V0, pw) + E * V0) if pw != 0.0 else 0.0
    Q_plus_sq = q_plus_sq + W * W + 2.0 * delta
    Q_minus_sq = q_minus_sq + W * W - 2.0 * delta
    if V0 == 0.0:
        # Q± = p ± |W0|; the signed root keeps Q- analytic through p = |W0|.
        Q_plus = complex(p + W, 0.0)
        Q_minus = complex(p - W, 0.0)
    else:
        Q_plus = principal_momentum(Q_plus_sq)
        Q_minus = principal_momentum(Q_minus_sq)
    return Kinematics(
        E=E, m=m, p=p, a=a,
        q_plus_sq=q_plus_sq, q_minus_sq=q_minus_sq, delta=delta,
        Q_plus_sq=Q_plus_sq, Q_minus_sq=Q_minus_sq,
        Q_plus=Q_plus, Q_minus=Q_minus,
        zone=classify_zone(E, m, pot),
    )


def momenta(E: float, m: float, pot: StepPotential) -> Tuple[complex, complex]:
    """Return ``(Q_plus, Q_minus)`` in the potential region."""
    k = kinematics(E, m, pot)
    return k.Q_plus, k.Q_minus


def zone_boundaries(m: float, pot: StepPotential) -> Tuple[float, float]:
    """Return ``(klein_edge, diffusion_edge)``.

    The tunneling interval is ``[klein_edge, diffusion_edge]``; it is empty
    (both edges equal) for V0 = 0.
    """
    W = pot.w_mag
    return math.hypot(W, pot.V0 - m), math.hypot(W, pot.V0 + m)


def classify_zone(E: float, m: float, pot: StepPotential) -> Zone:
    _check(E, m)
    klein_edge, diffusion_edge = zone_boundaries(m, pot)
    if E > diffusion_edge:
        return Zone.DIFFUSION
    if E < klein_edge:
        return Zone.KLEIN
    return Zone.TUNNELING


def complex_momentum(kin: Kinematics) -> complex:
    """q- on the same branch convention as Q- (used by the W0 = 0 limit)."""
    return principal_momentum(kin.q_minus_sq)


def propagating(Q: complex) -> bool:
    return Q.imag == 0.0


def phase(Q: complex, z: float) -> complex:
    """``exp(i Q z)``, flushed to exact zero once the decay passes e^-700."""
    decay = Q.imag * z
    if decay > 700.0:
        return 0j
    return cmath.exp(1j * Q * z)
