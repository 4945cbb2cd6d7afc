"""Entropies and correlations created by concentration, the qutrit closed
forms, the Mpemba-like comparison, and activation by initial correlations."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .concentration import (
    ConcentrationReport,
    ZERO_GAIN,
    _sorted_probs,
    evolve_and_trace,
    joint_relocation_unitary,
    noneq_measure,
    product_spectrum,
    qutrit_delta_p,
)
from .errors import DimensionError
from .linalg import entropy_bits
from .states import BipartiteState, DensityMatrix, as_state, effective_qubit

__all__ = [
    "CorrelationReport",
    "MpembaComparison",
    "P_PLUS",
    "activation_delta",
    "activation_demo",
    "entanglement_advantage",
    "mpemba_compare",
    "mpemba_output_measure",
    "mpemba_scan",
    "mutual_information",
    "qutrit_optimal_marginals",
    "qutrit_optimal_mutual_information",
    "result4_check",
    "von_neumann_entropy",
]

P_PLUS = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class CorrelationReport:
    entropy_a: float
    entropy_b: float
    entropy_ab: float
    mutual_information: float


def von_neumann_entropy(rho) -> float:
    """``-tr(rho log2 rho)``."""
    return entropy_bits(as_state(rho).eigenvalues)


def mutual_information(sigma: BipartiteState) -> CorrelationReport:
    s_a = von_neumann_entropy(sigma.marginal_a)
    s_b = von_neumann_entropy(sigma.marginal_b)
    s_ab = von_neumann_entropy(sigma)
    return CorrelationReport(s_a, s_b, s_ab, s_a + s_b - s_ab)


def _qutrit(spec) -> np.ndarray:
    a = _sorted_probs(spec)
    if a.size != 3:
        raise DimensionError(f"expected a qutrit spectrum, got {a.size} eigenvalues")
    return a


def qutrit_optimal_marginals(spec) -> tuple[DensityMatrix, DensityMatrix]:
    """Marginals of ``rho (x) rho`` after the ``|10> <-> |02>`` swap, in the eigenbasis."""
    a0, a1, a2 = _qutrit(spec)
    sigma_a = np.array([a0 * (a0 + 2 * a1), a1 * a1 + (1 - a2) * a2, a2])
    sigma_b = np.array([a0 * (a0 + 2 * a2), a1, a2 * a2 + (1 - a1) * a1])
    return DensityMatrix(np.diag(sigma_a).astype(complex)), DensityMatrix(np.diag(sigma_b).astype(complex))


def qutrit_optimal_mutual_information(spec) -> float:
    """``S(sigma_A) + S(sigma_B) - 2 S(rho)`` for the swap output."""
    a = _qutrit(spec)
    sigma_a, sigma_b = qutrit_optimal_marginals(a)
    return entropy_bits(sigma_a.eigenvalues) + entropy_bits(sigma_b.eigenvalues) - 2 * entropy_bits(a)


def result4_check(spec) -> tuple[float, float]:
    """``(delta_p, I(A:B))`` for a qutrit under its optimal swap."""
    a = _qutrit(spec)
    mi = qutrit_optimal_mutual_information(a)
    return qutrit_delta_p(a), (mi if mi > ZERO_GAIN else 0.0)


@dataclass(frozen=True)
class MpembaComparison:
    p1: float
    p2: float
    input_measure_1: float
    input_measure_2: float
    output_measure_1: float
    output_measure_2: float
    inversion: bool


def mpemba_output_measure(p: float) -> float:
    """``P`` of B after the swap on ``rho(p) (x) rho(p)``: ``log2(3 max{p^2, 1-p})``."""
    rho = effective_qubit(p, 3)
    _, sigma_b = qutrit_optimal_marginals(rho.eigenvalues)
    return noneq_measure(sigma_b)


def mpemba_compare(p1: float, p2: float, tol: float = 1e-12) -> MpembaComparison:
    """Compare input and B-output non-equilibrium for two effective qubits.

    ``inversion`` is set when the purer input leaves B strictly more mixed.
    """
    in1 = noneq_measure(effective_qubit(p1, 3))
    in2 = noneq_measure(effective_qubit(p2, 3))
    out1 = mpemba_output_measure(p1)
    out2 = mpemba_output_measure(p2)
    d_in, d_out = in1 - in2, out1 - out2
    inversion = (d_in > tol and d_out < -tol) or (d_in < -tol and d_out > tol)
    return MpembaComparison(p1, p2, in1, in2, out1, out2, inversion)


def mpemba_scan(step: float, reference: float = 0.5) -> list[MpembaComparison]:
    n = int(round(0.5 / step))
    if n < 1 or abs(n * step - 0.5) > 1e-9:
        raise ValueError(f"step must divide 1/2, got {step}")
    return [mpemba_compare(0.5 + k * 0.5 / n, reference) for k in range(n + 1)]


def activation_delta(rho) -> float:
    """Gain on A when two copies share the purification ``|rho>``: ``-log2 ||rho||_inf``."""
    rho = as_state(rho)
    return max(0.0, -float(np.log2(rho.eigenvalues[0])))


def entanglement_advantage(rho) -> float:
    """Extra gain from the purification over product inputs: ``-log2 KF_d(rho (x) rho)``."""
    rho = as_state(rho)
    c, _ = product_spectrum(rho.eigenvalues)
    adv = -float(np.log2(np.sum(c[: rho.dim])))
    return adv if adv > ZERO_GAIN else 0.0


def activation_demo(joint: BipartiteState) -> ConcentrationReport:
    """Concentrate on A by consuming the correlations already in ``joint``."""
    if not isinstance(joint, BipartiteState):
        raise TypeError("activation_demo needs a BipartiteState")
    return evolve_and_trace(joint, joint_relocation_unitary(joint))

