"""Concentrating informational non-equilibrium with global unitaries on two copies of a state."""

from .concentration import (
    ConcentrationReport,
    concentrate,
    delta_p,
    evolve_and_trace,
    is_bound,
    ky_fan,
    max_relocation,
    noneq_measure,
    optimal_unitary,
    qutrit_delta_p,
    simple_unitary,
)
from .correlations import (
    P_PLUS,
    activation_delta,
    activation_demo,
    entanglement_advantage,
    mpemba_compare,
    mutual_information,
    qutrit_optimal_marginals,
    result4_check,
    von_neumann_entropy,
)
from .linalg import Spectrum, hermitian_eig, kron, op_norm, partial_trace, psd_sqrt
from .randomness import RandomnessReport, guess_prob, order_counterexample, randomness_gain, randomness_unitary
from .states import (
    BipartiteState,
    DensityMatrix,
    dephased_pure,
    effective_qubit,
    from_eigenvalues,
    isotropic,
    maximally_mixed,
    product,
    purified_mixture,
    validate,
)

__version__ = "0.1.0"
