"""``qstep`` command line.

Exit codes: 0 success, 1 invalid configuration or singular point,
2 a flux residual above tolerance.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from .errors import QStepError
from .kinematics import StepPotential
from .sweep import (
    PointResult,
    SweepConfig,
    compute_sweep,
    evaluate_point,
    preset_config,
    run_sweep,
    write_text,
)
from .svg import preset_figure

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_FLUX = 2


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; 2 is reserved for the flux gate."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> List[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _add_potential_args(p, multi: bool) -> None:
    p.add_argument("--m", type=float, default=1.0, help="mass (default 1)")
    p.add_argument("--V0", type=float, required=True, help="complex part of the step")
    if multi:
        p.add_argument("--W0", type=_float_list, required=True, help="|W0| values, comma-separated")
    else:
        p.add_argument("--W0", type=float, default=None, help="|W0| (with --phi)")
        p.add_argument("--V1", type=float, default=None, help="j part of the step (instead of --W0)")
        p.add_argument("--V2", type=float, default=None, help="k part of the step (instead of --W0)")
    p.add_argument("--phi", type=float, default=0.0, help="phase of W0 in radians (default 0)")
    p.add_argument("--tol", type=float, default=1e-10, help="flux residual tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog="qstep", description="Dirac scattering off a quaternionic potential step")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    pt = sub.add_parser("point", help="evaluate a single energy")
    _add_potential_args(pt, multi=False)
    pt.add_argument("--E", type=float, required=True, help="total energy (> m)")

    sw = sub.add_parser("sweep", help="energy sweep to CSV (and SVG)")
    _add_potential_args(sw, multi=True)
    sw.add_argument("--emin", type=float, required=True, help="lowest E/m (> 1)")
    sw.add_argument("--emax", type=float, required=True, help="highest E/m")
    sw.add_argument("--steps", type=int, required=True, help="number of energies (>= 2)")
    sw.add_argument("--out", required=True, help="CSV path")
    sw.add_argument("--svg", default=None, help="optional SVG path")

    for n in (1, 2, 3, 4):
        fg = sub.add_parser(f"fig{n}", help=f"preset sweep for figure {n} (V0 = 3m, |W0| = 0..3m)")
        fg.add_argument("--out-dir", required=True)
        fg.add_argument("--m", type=float, default=1.0)
        fg.add_argument("--tol", type=float, default=1e-10)
        fg.add_argument("--no-svg", action="store_true", help="write the CSV only")
        fg.set_defaults(figure=n)
    return parser


def _point_potential(args) -> StepPotential:
    if args.V1 is not None or args.V2 is not None:
        if args.W0 is not None:
            raise QStepError("give either --W0/--phi or --V1/--V2, not both")
        return StepPotential(args.V0, args.V1 or 0.0, args.V2 or 0.0)
    return StepPotential.from_polar(args.V0, args.W0 or 0.0, args.phi)


def _c(z: complex) -> str:
    return f"{z.real:.12g} {'+' if z.imag >= 0 else '-'} {abs(z.imag):.12g}i"


def format_report(res: PointResult) -> str:
    k, s, w, v = res.kin, res.solution, res.weights, res.velocities
    pot = res.pot
    lines = [
        f"E = {res.E:.12g}  m = {res.m:.12g}  V0 = {pot.V0:.12g}  |W0| = {pot.w_mag:.12g}  phi = {pot.phi:.12g}",
        f"zone: {k.zone}",
        f"Q+ = {_c(k.Q_plus)}   (Q+^2 = {k.Q_plus_sq:.12g})",
        f"Q- = {_c(k.Q_minus)}   (Q-^2 = {k.Q_minus_sq:.12g})",
        f"delta = {k.delta:.12g}",
        f"method: {s.method}",
        f"R  = {_c(s.R)}   |R|  = {abs(s.R):.12g}",
        f"R~ = {_c(s.R_tilde)}   |R~| = {abs(s.R_tilde):.12g}",
        f"T  = {_c(s.T)}   |T|  = {abs(s.T):.12g}",
        f"T~ = {_c(s.T_tilde)}   |T~| = {abs(s.T_tilde):.12g}",
        f"rho = {w.rho:.12g}   rho~ = {w.rho_tilde:.12g}",
        f"reflected flux   = {s.reflection:.12g}",
        f"transmitted flux = {w.rho * abs(s.T) ** 2 + w.rho_tilde * abs(s.T_tilde) ** 2:.12g}",
        f"flux residual     = {res.flux_residual:.3e}",
        f"matching residual = {res.matching_residual:.3e}",
        f"v_in = {v.v_in:.12g}   v+ = {v.v_plus:.12g}   v- = "
        + ("evanescent" if v.minus_evanescent else f"{v.v_minus:.12g}"),
    ]
    if s.R == 0 and s.R_tilde == 0:
        lines.append("*** total transmission: R = R~ = 0 ***")
    return "\n".join(lines)


def cmd_point(args) -> int:
    pot = _point_potential(args)
    res = evaluate_point(args.E, args.m, pot)
    if not res.ok:
        print(f"qstep: {res.error}", file=sys.stderr)
        return EXIT_INVALID
    print(format_report(res))
    if not abs(res.flux_residual) < args.tol:
        print(f"qstep: flux residual {res.flux_residual:.3e} exceeds {args.tol:g}", file=sys.stderr)
        return EXIT_FLUX
    return EXIT_OK


def _summarise(result, label: str) -> int:
    print(f"{label}: {len(result.rows)} rows, max |flux residual| = {result.max_flux_residual:.3e}, "
          f"{result.n_errors} singular rows")
    if result.n_over_tolerance:
        print(f"qstep: {result.n_over_tolerance} rows exceed flux tolerance {result.config.tolerance:g}",
              file=sys.stderr)
        return EXIT_FLUX
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(
        V0=args.V0, W0_list=tuple(args.W0), e_lo=args.emin, e_hi=args.emax, steps=args.steps,
        m=args.m, phi=args.phi, csv_path=args.out, svg_path=args.svg, tolerance=args.tol,
    )
    return _summarise(run_sweep(config), args.out)


def cmd_figure(args) -> int:
    n = args.figure
    csv_path = os.path.join(args.out_dir, f"fig{n}.csv")
    config = preset_config(m=args.m, csv_path=csv_path, tolerance=args.tol)
    result = compute_sweep(config)
    write_text(csv_path, result.to_csv())
    if not args.no_svg:
        write_text(os.path.join(args.out_dir, f"fig{n}.svg"), preset_figure(result, n))
    return _summarise(result, csv_path)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "point":
            return cmd_point(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        return cmd_figure(args)
    except QStepError as exc:
        print(f"qstep: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
