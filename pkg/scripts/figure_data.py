"""Plot-ready datasets for the two ETS-versus-power figures.

Each row solves the shortest T reaching the target power at the design RR,
then reports ETS at each true RR. Use --quick for a coarse grid.
"""

import argparse
from pathlib import Path

from maxsprt import tables
from maxsprt.csvio import write_rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--quick", action="store_true", help="powers 0.8 and 0.95 only")
    args = parser.parse_args()

    powers = (0.8, 0.95) if args.quick else tables.FIG_POWER
    args.out.mkdir(parents=True, exist_ok=True)
    for fig, values in ((1, tables.FIG_M), (2, tables.FIG_D)):
        points = tables.figure_points(fig, values, powers, tables.FIG_DESIGN_RR, tables.FIG_TRUE_RR)
        chunks = tables.run_cells(tables.figure_rows, points, args.jobs)
        path = args.out / f"figure{fig}.csv"
        with path.open("w", newline="") as fh:
            write_rows((r for c in chunks for r in c), tables.FIGURE_COLUMNS, fh)
        print(f"figure {fig}: {len(points)} design points -> {path}")


if __name__ == "__main__":
    main()
