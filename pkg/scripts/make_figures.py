"""Write the four preset sweeps (CSV + SVG) into one directory.

    python scripts/make_figures.py --out-dir figures
"""

import argparse
import os
import sys

from qstep.svg import preset_figure
from qstep.sweep import compute_sweep, preset_config, write_text


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out-dir", default="figures")
    ap.add_argument("--m", type=float, default=1.0)
    args = ap.parse_args(argv)

    result = compute_sweep(preset_config(m=args.m))
    write_text(os.path.join(args.out_dir, "preset.csv"), result.to_csv())
    for n in (1, 2, 3, 4):
        path = os.path.join(args.out_dir, f"fig{n}.svg")
        write_text(path, preset_figure(result, n))
        print(path)
    print(f"{len(result.rows)} rows, max |flux residual| {result.max_flux_residual:.2e}, "
          f"{result.n_errors} singular rows")
    return 0 if result.n_over_tolerance == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
