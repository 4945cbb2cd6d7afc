"""Qutrit simplex sweeps: the three panels over ``a0 >= a1 >= a2``.

Panel ``a`` is the optimal gain on A, ``b`` the change of ``P`` on B under the
optimal swap, ``c`` the mutual information that swap creates.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from .concentration import noneq_measure, qutrit_delta_p
from .correlations import qutrit_optimal_marginals, qutrit_optimal_mutual_information
from .states import DensityMatrix

PANELS = ("a", "b", "c")
HEADER = ("a0", "a1", "a2", "value")


def grid_size(step: float) -> int:
    if not (0.0 < step <= 0.5):
        raise ValueError(f"step must be in (0, 0.5], got {step}")
    n = int(round(1.0 / step))
    if abs(n * step - 1.0) > 1e-9:
        raise ValueError(f"1/step must be an integer, got step={step}")
    return n


def qutrit_grid(step: float, full_triangle: bool = False) -> list[tuple[float, float, float]]:
    """Barycentric grid points. The ordered sector by default, every point of
    the triangle with ``full_triangle``."""
    n = grid_size(step)
    pts = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            if full_triangle or i >= j >= k:
                pts.append((i / n, j / n, k / n))
    return pts


def panel_value(point, panel: str) -> float:
    a = np.sort(np.asarray(point, dtype=float))[::-1]
    if panel == "a":
        return qutrit_delta_p(a)
    if panel == "b":
        _, sigma_b = qutrit_optimal_marginals(a)
        rho = DensityMatrix(np.diag(a).astype(complex))
        return noneq_measure(sigma_b) - noneq_measure(rho)
    if panel == "c":
        return max(0.0, qutrit_optimal_mutual_information(a))
    raise ValueError(f"panel must be one of {PANELS}, got {panel!r}")


def _row(args) -> tuple[float, float, float, float]:
    point, panel = args
    return (*point, panel_value(point, panel))


def sweep_rows(step: float, panel: str, full_triangle: bool = False, workers: int = 1) -> list[tuple]:
    """Rows in grid order whatever the worker count."""
    if panel not in PANELS:
        raise ValueError(f"panel must be one of {PANELS}, got {panel!r}")
    jobs = [(p, panel) for p in qutrit_grid(step, full_triangle)]
    if workers <= 1:
        return [_row(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_row, jobs, chunksize=64))


def fmt(x: float) -> str:
    return f"{x + 0.0:.12g}"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(HEADER)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_sweep(path, step: float, panel: str, full_triangle: bool = False, workers: int = 1) -> int:
    rows = sweep_rows(step, panel, full_triangle, workers)
    with open(Path(path), "w", encoding="utf-8", newline="") as fh:
        fh.write(rows_to_csv(rows))
    return len(rows)
