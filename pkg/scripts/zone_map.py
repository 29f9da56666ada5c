"""Tabulate zone edges and a few characteristic amplitudes versus |W0|.

For each |W0| the script prints the Klein and diffusion edges, the largest
|R| in the Klein zone, the largest |R| inside the tunneling window and the
worst flux residual over the whole energy grid.

    python scripts/zone_map.py --V0 3 --w-max 4 --w-steps 9
"""

import argparse
import sys

import numpy as np

from qstep import StepPotential, Zone, zone_boundaries
from qstep.sweep import evaluate_point


def scan(V0, W, m, e_hi, steps):
    pot = StepPotential(V0, 0.0, W)
    klein, diffusion = zone_boundaries(m, pot)
    best = {Zone.KLEIN: float("nan"), Zone.TUNNELING: float("nan")}
    worst = 0.0
    for E in np.linspace(m * (1 + 1e-4), e_hi * m, steps):
        res = evaluate_point(E, m, pot)
        if not res.ok:
            continue
        worst = max(worst, abs(res.flux_residual))
        zone = res.kin.zone
        if zone in best:
            r = abs(res.solution.R)
            best[zone] = r if np.isnan(best[zone]) else max(best[zone], r)
    return klein, diffusion, best[Zone.KLEIN], best[Zone.TUNNELING], worst


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--V0", type=float, default=3.0)
    ap.add_argument("--m", type=float, default=1.0)
    ap.add_argument("--w-max", type=float, default=4.0)
    ap.add_argument("--w-steps", type=int, default=9)
    ap.add_argument("--e-max", type=float, default=10.0, help="upper E/m of the grid")
    ap.add_argument("--steps", type=int, default=2000)
    args = ap.parse_args(argv)

    print(f"{'|W0|':>6} {'klein':>9} {'diffusion':>9} {'max|R| K':>10} {'max|R| T':>10} {'flux':>9}")
    for W in np.linspace(0.0, args.w_max, args.w_steps):
        k, d, rk, rt, worst = scan(args.V0, W, args.m, args.e_max, args.steps)
        print(f"{W:6.3f} {k:9.4f} {d:9.4f} {rk:10.5f} {rt:10.5f} {worst:9.1e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
