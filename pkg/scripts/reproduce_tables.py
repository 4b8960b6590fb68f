"""Regenerate every result table as CSV under an output directory.

    python scripts/reproduce_tables.py --out results/ --jobs 4
"""

import argparse
import time
from pathlib import Path

from maxsprt import tables
from maxsprt.csvio import write_rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("results"))
    parser.add_argument("--tables", type=int, nargs="+", default=sorted(tables.COLUMNS))
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--backend", default="auto")
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for tid in args.tables:
        start = time.perf_counter()
        cells = tables.table_cells(tid, args.backend)
        chunks = tables.run_cells(tables.cell_rows, cells, args.jobs)
        path = args.out / f"table{tid}.csv"
        with path.open("w", newline="") as fh:
            write_rows((r for c in chunks for r in c), tables.COLUMNS[tid], fh)
        print(f"table {tid}: {len(cells)} cells -> {path} ({time.perf_counter() - start:.0f}s)")


if __name__ == "__main__":
    main()
