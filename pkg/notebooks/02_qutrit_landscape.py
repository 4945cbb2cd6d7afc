"""
The qutrit landscape
====================

For qutrits the gain has the closed form log2(a0 + 2 a1) with sorted
eigenvalues. This script walks the ordered simplex, checks the closed form
against the full simulation, and writes the three sweep panels to CSV.
"""

import tempfile
from pathlib import Path

import numpy as np

from inconc import concentrate, from_eigenvalues, qutrit_delta_p
from inconc.correlations import result4_check
from inconc.sweep import qutrit_grid, write_sweep

grid = qutrit_grid(0.05)
worst = 0.0
for a in grid:
    rep = concentrate(from_eigenvalues(a), "simple")
    worst = max(worst, abs(rep.delta_p - qutrit_delta_p(a)))
print(f"{len(grid)} points, closed form vs simulation: {worst:.1e}")

# Every point that gains also builds correlations between A and B.
gains = [(a, *result4_check(a)) for a in grid]
print("gaining points without correlations:", sum(1 for _, g, mi in gains if g > 0 and mi <= 0))

# States with a1 = a2 are stuck: no gain at all.
stuck = [a for a, g, _ in gains if g == 0.0]
print("zero-gain points:", [tuple(round(float(x), 2) for x in a) for a in stuck])

# Panels: a is the gain on A, b the change on B, c the mutual information.
out = Path(tempfile.mkdtemp())
for panel in "abc":
    n = write_sweep(out / f"panel_{panel}.csv", 0.01, panel)
    print(f"panel {panel}: {n} rows -> {out / f'panel_{panel}.csv'}")
print((out / "panel_a.csv").read_text().splitlines()[:4])
