"""Concentrating intrinsic randomness.

The adversarial guessing probability of a d-level state is
``(tr sqrt(rho))**2 / d``. Whenever ``delta_p(rho) > 0`` a single pairwise
swap ``|i*, j*> <-> |0, k*>`` in the eigenbasis of ``rho`` raises ``P`` on A
and lowers the guessing probability at the same time.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .concentration import delta_p, evolve_and_trace, in_eigenbasis, noneq_measure, product_spectrum
from .errors import NoConstructionError
from .linalg import psd_sqrt
from .states import DensityMatrix, as_state, from_eigenvalues

__all__ = [
    "RandomnessReport",
    "guess_prob",
    "order_counterexample",
    "randomness_gain",
    "randomness_unitary",
    "trace_sqrt",
]


@dataclass(frozen=True)
class RandomnessReport:
    p_guess_before: float
    p_guess_after: float
    p_before: float
    p_after: float
    delta_star: float
    indices: tuple[int, int, int]  # (i*, j*, k*)
    unitary: np.ndarray  # V in the computational basis
    sigma_a: DensityMatrix
    eigenvalues: np.ndarray  # of the input, non-increasing

    @property
    def gain(self) -> float:
        """``tr sqrt(rho) - tr sqrt(sigma_A)`` from the closed form."""
        a = self.eigenvalues
        i = self.indices[0]
        d = self.delta_star
        return float(np.sqrt(a[0]) + np.sqrt(a[i]) - np.sqrt(a[0] + d) - np.sqrt(max(a[i] - d, 0.0)))


def trace_sqrt(rho) -> float:
    rho = as_state(rho)
    return float(np.trace(psd_sqrt(rho.matrix)).real)


def guess_prob(rho) -> float:
    """``(tr sqrt(rho))**2 / d``; ``1/d`` for pure states, 1 for ``I/d``."""
    rho = as_state(rho)
    return trace_sqrt(rho) ** 2 / rho.dim


def order_counterexample() -> tuple[DensityMatrix, DensityMatrix]:
    """Five-level ``(sigma, rho)`` with ``P(sigma) > P(rho)`` but also a larger
    guessing probability, so a larger ``P`` does not imply more intrinsic randomness.
    """
    sigma = from_eigenvalues([1 / 2, 1 / 8, 1 / 8, 1 / 8, 1 / 8])
    rho = from_eigenvalues([1 / 3, 1 / 3, 1 / 3, 0, 0])
    return sigma, rho


def _choose_indices(a: np.ndarray, tol: float) -> tuple[int, int, int, float]:
    d = len(a)
    c, pairs = product_spectrum(a)
    for k in range(1, d):
        if c[k] - a[0] * a[k] <= tol:
            continue
        # i = 0 would leave A's |0> population unchanged. Products are symmetric,
        # so if (0, j) decomposes c_k then so does (j, 0) and a usable pair exists.
        same = [(int(i), int(j)) for (i, j), v in zip(pairs, c) if abs(v - c[k]) <= tol]
        i, j = min(p for p in same if p[0] != 0)
        return i, j, k, float(a[i] * a[j] - a[0] * a[k])
    raise NoConstructionError("no k* with c_k > ||rho||_inf a_k: the state admits no concentration")


def _pair_swap(d: int, x: int, y: int) -> np.ndarray:
    perm = np.arange(d * d)
    perm[[x, y]] = perm[[y, x]]
    return np.eye(d * d, dtype=complex)[perm]


def randomness_unitary(rho, tol: config.Tolerances | None = None) -> RandomnessReport:
    """Build the swap ``V: |i*, j*> <-> |0, k*>`` and evaluate it.

    ``k*`` is the smallest index with ``c_k > a_0 a_k``; among the products equal
    to ``c_k*`` the lexicographically smallest ``(i, j)`` with ``i != 0`` is used.
    Raises ``NoConstructionError`` when ``delta_p(rho)`` is zero.
    """
    tol = config.resolve(tol)
    rho = as_state(rho)
    if delta_p(rho) <= 0.0:
        raise NoConstructionError("delta_p(rho) = 0: no randomness-concentrating swap exists")
    a = rho.eigenvalues
    d = rho.dim
    i, j, k, delta = _choose_indices(a, tol.entropy_clamp)
    v = in_eigenbasis(_pair_swap(d, i * d + j, k), rho)
    report = evolve_and_trace((rho, rho), v)
    return RandomnessReport(
        p_guess_before=guess_prob(rho),
        p_guess_after=guess_prob(report.sigma_a),
        p_before=noneq_measure(rho),
        p_after=report.p_after,
        delta_star=delta,
        indices=(i, j, k),
        unitary=v,
        sigma_a=report.sigma_a,
        eigenvalues=a.copy(),
    )


def randomness_gain(rho) -> float:
    """``sqrt(a0) + sqrt(a_i*) - sqrt(a0 + delta*) - sqrt(a_i* - delta*)``."""
    return randomness_unitary(rho).gain
