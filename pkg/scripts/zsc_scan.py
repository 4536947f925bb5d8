#!/usr/bin/env python3
"""Scan the closed form of int_0^u Z(t|m) sc(t|m) dt across several branch
sheets (the jump at odd multiples of K(m) is the branch increment
pi^2/(2 K sqrt(1-m))), writing u, branch-0 closed form, and the continuous
integral to CSV.

Usage: python scripts/zsc_scan.py [m] [outfile]
"""

import math
import sys

import numpy as np

from appellfield import elliptic, jacobi

m = float(sys.argv[1]) if len(sys.argv) > 1 else 0.85
out = sys.argv[2] if len(sys.argv) > 2 else "zsc_scan.csv"

K = elliptic.comp_k(m)
delta = jacobi.zsc_branch_jump(m)
print(f"m = {m}: K = {K:.6f}, branch increment = {delta:.6f}")

rows = []
for u in np.linspace(-4 * K, 4 * K, 1601):
    u = float(u)
    k = math.floor(u / K + 0.5)
    if k % 2 != 0 and abs(u - k * K) < 1e-6:
        continue  # pole of sc
    closed0 = jacobi.int_z_sc(u, m, branch=0)
    sheet = math.floor((u + K) / (2.0 * K))
    rows.append((u, closed0, closed0 + sheet * delta))

with open(out, "w", encoding="ascii") as fh:
    fh.write("u,closed_branch0,continuous\n")
    for row in rows:
        fh.write(",".join(repr(v) for v in row) + "\n")
print(f"wrote {len(rows)} rows to {out}")
