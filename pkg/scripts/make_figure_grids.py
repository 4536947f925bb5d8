#!/usr/bin/env python3
"""Emit the cylinder and tube potential grids (R=1, Z=0.7, unit density) as
CSV files, the data behind the standard contour plots.

Usage: python scripts/make_figure_grids.py [outdir]
"""

import sys

from appellfield.cli import main

outdir = sys.argv[1] if len(sys.argv) > 1 else "."

common = ["--R", "1", "--Z", "0.7", "--density", "1",
          "--r-min", "0", "--r-max", "3", "--z-min", "-3", "--z-max", "3",
          "--nr", "61", "--nz", "121", "--format", "csv"]

for body, extra, name in (("cyl", [], "cylinder_grid.csv"),
                          ("tube", ["--branch", "-1", "0", "1"], "tube_grid.csv")):
    path = f"{outdir}/{name}"
    rc = main(["grid", "--body", body, *common, *extra, "--out", path])
    if rc != 0:
        print(f"failed on {body} grid", file=sys.stderr)
        sys.exit(rc)
    print(f"wrote {path}")

