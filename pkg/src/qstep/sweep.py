"""Energy sweeps: one row per (E, |W0|) pair, emitted as CSV."""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .conservation import FluxWeights, flux_balance, flux_weights
from .errors import DomainError, QStepError
from .kinematics import Kinematics, StepPotential, kinematics
from .observables import GroupVelocities, group_velocities
from .scattering import ScatteringSolution, matching_residual, solve
from .spinors import ChannelCoeffs, channel_coeffs

COLUMNS = (
    "E_over_m", "V0", "W0_mag", "phi", "zone",
    "ReQm", "ImQm", "ReQp", "ImQp",
    "ReR", "ImR", "ReRt", "ImRt", "ReT", "ImT", "ReTt", "ImTt",
    "absR", "absRt", "absT", "absTt",
    "rho", "rho_tilde", "flux_residual",
    "v_in", "v_plus", "v_minus", "error",
)

THREADS_ENV = "QSTEP_THREADS"


@dataclass(frozen=True)
class SweepConfig:
    V0: float
    W0_list: Tuple[float, ...]
    e_lo: float
    e_hi: float
    steps: int
    m: float = 1.0
    phi: float = 0.0
    csv_path: Optional[str] = None
    svg_path: Optional[str] = None
    tolerance: float = 1e-10

    def __post_init__(self):
        object.__setattr__(self, "W0_list", tuple(float(w) for w in self.W0_list))
        if not self.m > 0:
            raise DomainError(f"m must be positive, got {self.m!r}")
        if not self.V0 >= 0:
            raise DomainError(f"V0 must be >= 0, got {self.V0!r}")
        if not self.W0_list or any(not w >= 0 for w in self.W0_list):
            raise DomainError(f"need at least one |W0| >= 0, got {self.W0_list!r}")
        if not self.e_lo > 1:
            raise DomainError(f"E/m lower bound must exceed 1, got {self.e_lo!r}")
        if not self.e_hi > self.e_lo:
            raise DomainError(f"empty E/m range ({self.e_lo!r}, {self.e_hi!r})")
        if int(self.steps) != self.steps or self.steps < 2:
            raise DomainError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not self.tolerance > 0:
            raise DomainError(f"tolerance must be positive, got {self.tolerance!r}")

    def energies(self) -> List[float]:
        """E/m grid, both ends included."""
        return [float(x) for x in np.linspace(self.e_lo, self.e_hi, int(self.steps))]

    def potentials(self) -> List[StepPotential]:
        return [StepPotential.from_polar(self.V0, w, self.phi) for w in sorted(self.W0_list)]


@dataclass
class PointResult:
    E: float
    m: float
    pot: StepPotential
    kin: Optional[Kinematics] = None
    coeffs: Optional[ChannelCoeffs] = None
    solution: Optional[ScatteringSolution] = None
    weights: Optional[FluxWeights] = None
    velocities: Optional[GroupVelocities] = None
    flux_residual: float = math.nan
    matching_residual: float = math.nan
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


def evaluate_point(E: float, m: float, pot: StepPotential) -> PointResult:
    """Everything reported for one energy; QStep errors land in ``error``."""
    res = PointResult(E, m, pot)
    try:
        res.kin = kinematics(E, m, pot)
        res.velocities = group_velocities(res.kin, pot)
        res.coeffs = channel_coeffs(res.kin, pot)
        res.solution = solve(res.kin, pot, res.coeffs)
        res.weights = flux_weights(res.coeffs, res.kin, pot)
        res.flux_residual = flux_balance(res.solution, res.weights)
        res.matching_residual = matching_residual(res.kin, pot, res.coeffs, res.solution)
    except QStepError as exc:
        res.error = f"{type(exc).__name__}: {exc}"
    return res


def fmt(x: Optional[float]) -> str:
    if x is None:
        return ""
    return format(float(x) + 0.0, ".17g")  # + 0.0 folds -0.0 into 0.0


def csv_row(e_over_m: float, res: PointResult) -> Dict[str, str]:
    pot = res.pot
    row = dict.fromkeys(COLUMNS, "")
    row.update(E_over_m=fmt(e_over_m), V0=fmt(pot.V0), W0_mag=fmt(pot.w_mag), phi=fmt(pot.phi))
    if res.kin is not None:
        k = res.kin
        row.update(
            zone=str(k.zone),
            ReQm=fmt(k.Q_minus.real), ImQm=fmt(k.Q_minus.imag),
            ReQp=fmt(k.Q_plus.real), ImQp=fmt(k.Q_plus.imag),
        )
    if res.velocities is not None:
        v = res.velocities
        row.update(v_in=fmt(v.v_in), v_plus=fmt(v.v_plus), v_minus=fmt(v.v_minus))
    if res.ok:
        s, w = res.solution, res.weights
        for name, z in (("R", s.R), ("Rt", s.R_tilde), ("T", s.T), ("Tt", s.T_tilde)):
            row["Re" + name] = fmt(z.real)
            row["Im" + name] = fmt(z.imag)
            row["abs" + name] = fmt(abs(z))
        row.update(rho=fmt(w.rho), rho_tilde=fmt(w.rho_tilde), flux_residual=fmt(res.flux_residual))
    row["error"] = res.error
    return row


def thread_count(default: Optional[int] = None) -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise DomainError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
        return max(1, n)
    return default or os.cpu_count() or 1


@dataclass
class SweepResult:
    config: SweepConfig
    rows: List[Dict[str, str]] = field(default_factory=list)
    points: List[PointResult] = field(default_factory=list)

    @property
    def n_errors(self) -> int:
        return sum(1 for p in self.points if not p.ok)

    @property
    def max_flux_residual(self) -> float:
        vals = [abs(p.flux_residual) for p in self.points if p.ok]
        return max(vals) if vals else math.nan

    @property
    def n_over_tolerance(self) -> int:
        tol = self.config.tolerance
        return sum(1 for p in self.points if p.ok and not abs(p.flux_residual) < tol)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()


def _evaluate_energy(args) -> List[Tuple[float, PointResult]]:
    e_over_m, m, pots = args
    return [(e_over_m, evaluate_point(e_over_m * m, m, pot)) for pot in pots]


def compute_sweep(config: SweepConfig, threads: Optional[int] = None) -> SweepResult:
    """Rows come out in ascending E, then ascending |W0|, for any thread count."""
    pots = config.potentials()
    jobs = [(e, config.m, pots) for e in config.energies()]
    n = threads or thread_count()
    if n == 1:
        chunks = [_evaluate_energy(job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            chunks = list(pool.map(_evaluate_energy, jobs, chunksize=max(1, len(jobs) // (4 * n))))
    result = SweepResult(config)
    for chunk in chunks:
        for e_over_m, res in chunk:
            result.points.append(res)
            result.rows.append(csv_row(e_over_m, res))
    return result


def run_sweep(config: SweepConfig, threads: Optional[int] = None) -> SweepResult:
    """Compute the sweep and write the CSV (and SVG, if configured)."""
    from .svg import sweep_figure

    result = compute_sweep(config, threads)
    if config.csv_path:
        write_text(config.csv_path, result.to_csv())
    if config.svg_path:
        write_text(config.svg_path, sweep_figure(result))
    return result


def write_text(path: str, text: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


# Figure presets: V0 = 3m, |W0| in {0, 1, 2, 3} m, E/m on a 2000-point grid in (1, 10].
PRESET_V0 = 3.0
PRESET_W0 = (0.0, 1.0, 2.0, 3.0)
PRESET_STEPS = 2000
PRESET_E_HI = 10.0
PRESET_E_LO = 1.0 + (PRESET_E_HI - 1.0) / PRESET_STEPS


def preset_config(m: float = 1.0, csv_path: Optional[str] = None, svg_path: Optional[str] = None,
                  tolerance: float = 1e-10) -> SweepConfig:
    return SweepConfig(
        V0=PRESET_V0 * m, W0_list=tuple(w * m for w in PRESET_W0),
        e_lo=PRESET_E_LO, e_hi=PRESET_E_HI, steps=PRESET_STEPS, m=m,
        csv_path=csv_path, svg_path=svg_path, tolerance=tolerance,
    )


def series(result: SweepResult, w_mag: float, fn) -> Tuple[List[float], List[Optional[float]]]:
    """x = E/m, y = fn(point) for one |W0|; None where the point failed."""
    xs, ys = [], []
    for res in result.points:
        if res.pot.w_mag != w_mag:
            continue
        xs.append(res.E / res.m)
        ys.append(fn(res) if res.ok else None)
    return xs, ys


def w_values(result: SweepResult) -> Sequence[float]:
    return sorted({p.pot.w_mag for p in result.points})
