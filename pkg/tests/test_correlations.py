import math

import numpy as np
import pytest

from inconc.concentration import (
    concentrate,
    delta_p,
    evolve_and_trace,
    ky_fan,
    noneq_measure,
    simple_unitary,
)
from inconc.correlations import (
    P_PLUS,
    activation_delta,
    activation_demo,
    entanglement_advantage,
    mpemba_compare,
    mpemba_output_measure,
    mpemba_scan,
    mutual_information,
    qutrit_optimal_marginals,
    qutrit_optimal_mutual_information,
    result4_check,
    von_neumann_entropy,
)
from inconc.errors import DimensionError
from inconc.sampling import random_state
from inconc.states import (
    effective_qubit,
    from_eigenvalues,
    isotropic,
    maximally_mixed,
    product,
    purified_mixture,
)


def test_entropy_examples():
    assert von_neumann_entropy(maximally_mixed(4)) == pytest.approx(2.0)
    assert von_neumann_entropy(from_eigenvalues([1, 0, 0])) == 0.0
    assert von_neumann_entropy(from_eigenvalues([0.5, 0.25, 0.25])) == pytest.approx(1.5)


def test_mutual_information_product_and_bell(rng):
    rho, eta = random_state(2, rng), random_state(3, rng)
    rep = mutual_information(product(rho, eta))
    assert rep.mutual_information == pytest.approx(0.0, abs=1e-9)
    bell = isotropic(1.0, 2)
    rep = mutual_information(bell)
    assert rep.entropy_ab == pytest.approx(0.0, abs=1e-9)
    assert rep.mutual_information == pytest.approx(2.0, abs=1e-9)


# --- qutrit marginals under the simple swap -----------------------------------


def test_qutrit_marginals_match_simulation(rng):
    for _ in range(100):
        rho = random_state(3, rng, rotate=False)
        rep = evolve_and_trace((rho, rho), simple_unitary(3))
        sa, sb = qutrit_optimal_marginals(rho.eigenvalues)
        np.testing.assert_allclose(rep.sigma_a.matrix, sa.matrix, atol=1e-10)
        np.testing.assert_allclose(rep.sigma_b.matrix, sb.matrix, atol=1e-10)


def test_qutrit_marginals_half_half():
    sa, sb = qutrit_optimal_marginals([0.5, 0.5, 0])
    np.testing.assert_allclose(np.diag(sa.matrix).real, [0.75, 0.25, 0])
    np.testing.assert_allclose(np.diag(sb.matrix).real, [0.25, 0.5, 0.25])
    assert noneq_measure(sb) == pytest.approx(math.log2(1.5))
    assert noneq_measure(sa) == pytest.approx(math.log2(2.25))


def test_qutrit_mutual_information_matches_simulation(rng):
    for _ in range(50):
        rho = random_state(3, rng)
        rep = concentrate(rho, "simple")
        assert qutrit_optimal_mutual_information(rho.eigenvalues) == pytest.approx(rep.mutual_information, abs=1e-9)


def test_qutrit_helpers_reject_other_dims():
    with pytest.raises(DimensionError):
        qutrit_optimal_marginals([0.5, 0.5])
    with pytest.raises(DimensionError):
        result4_check([0.25] * 4)


def test_concentration_always_creates_correlations():
    n = 100
    for i in range(n + 1):
        for j in range(n + 1 - i):
            a = sorted((i / n, j / n, (n - i - j) / n), reverse=True)
            gain, mi = result4_check(a)
            if gain > 1e-12:
                assert mi > 0
            if gain == 0.0:
                assert mi == pytest.approx(0.0, abs=1e-9)


# --- Mpemba-like inversion ------------------------------------------------------


def test_mpemba_output_closed_form():
    for p in np.linspace(0.5, 1.0, 21):
        assert mpemba_output_measure(p) == pytest.approx(math.log2(3 * max(p * p, 1 - p)), abs=1e-12)
    assert mpemba_output_measure(P_PLUS) == pytest.approx(math.log2(3 * (1 - P_PLUS)), abs=1e-9)
    assert P_PLUS**2 == pytest.approx(1 - P_PLUS)


def test_mpemba_default_pair_inverts():
    cmp = mpemba_compare(P_PLUS, 0.5)
    assert cmp.input_measure_1 > cmp.input_measure_2
    assert cmp.output_measure_1 < cmp.output_measure_2
    assert cmp.inversion
    assert not mpemba_compare(0.9, 0.5).inversion
    assert not mpemba_compare(0.5, 0.5).inversion


def test_mpemba_scan_region():
    rows = mpemba_scan(0.001)
    inverted = [r.p1 for r in rows if r.inversion]
    assert min(inverted) > 0.5
    assert max(inverted) < 1 / math.sqrt(2)
    assert min(inverted) <= P_PLUS <= max(inverted)
    assert max(inverted) == pytest.approx(1 / math.sqrt(2), abs=2e-3)
    with pytest.raises(ValueError):
        mpemba_scan(0.3)


# --- activation by correlations ---------------------------------------------------


@pytest.mark.parametrize("d", [2, 3, 4])
def test_activation_decomposition(d, rng):
    for _ in range(20):
        rho = random_state(d, rng)
        kf = ky_fan(np.kron(rho.matrix, rho.matrix), d)
        assert activation_delta(rho) == pytest.approx(-math.log2(rho.eigenvalues[0]), abs=1e-12)
        assert activation_delta(rho) - delta_p(rho) == pytest.approx(-math.log2(kf), abs=1e-10)
        assert entanglement_advantage(rho) == pytest.approx(-math.log2(kf), abs=1e-10)


def test_activation_demo_attains_closed_form(rng):
    for d in (2, 3):
        rho = random_state(d, rng)
        rep = activation_demo(purified_mixture(1.0, rho))
        assert rep.delta_p == pytest.approx(activation_delta(rho), abs=1e-8)
        rep0 = activation_demo(purified_mixture(0.0, rho))
        assert rep0.delta_p == pytest.approx(delta_p(rho), abs=1e-8)


def test_activation_isotropic_qubits():
    for p in (1e-3, 0.1, 0.5, 1.0):
        rep = activation_demo(isotropic(p, 2))
        assert rep.delta_p > 0
        assert rep.delta_p == pytest.approx(math.log2(1 + p), abs=1e-9)


def test_activation_demo_needs_bipartite():
    with pytest.raises(TypeError):
        activation_demo(maximally_mixed(4))


def test_pure_states_have_no_activation():
    pure = from_eigenvalues([1, 0, 0])
    assert activation_delta(pure) == 0.0
    assert entanglement_advantage(pure) == 0.0
    assert entanglement_advantage(effective_qubit(0.5, 2)) == pytest.approx(math.log2(2))
