import math

import numpy as np
import pytest

from inconc.concentration import delta_p, noneq_measure
from inconc.errors import NoConstructionError
from inconc.randomness import (
    guess_prob,
    order_counterexample,
    randomness_gain,
    randomness_unitary,
    trace_sqrt,
)
from inconc.sampling import random_state
from inconc.states import effective_qubit, from_eigenvalues, maximally_mixed


def test_guess_prob_extremes(rng):
    for d in (2, 3, 5):
        assert guess_prob(maximally_mixed(d)) == pytest.approx(1.0)
        assert guess_prob(from_eigenvalues([1] + [0] * (d - 1))) == pytest.approx(1 / d)
    for _ in range(20):
        rho = random_state(4, rng)
        assert 1 / 4 - 1e-12 <= guess_prob(rho) <= 1 + 1e-12
        assert trace_sqrt(rho) >= 1 - 1e-12


def test_order_counterexample():
    sigma, rho = order_counterexample()
    assert noneq_measure(sigma) == pytest.approx(math.log2(5 / 2), abs=1e-12)
    assert noneq_measure(rho) == pytest.approx(math.log2(5 / 3), abs=1e-12)
    assert guess_prob(sigma) == pytest.approx((math.sqrt(0.5) + 4 * math.sqrt(1 / 8)) ** 2 / 5, abs=1e-12)
    assert guess_prob(rho) == pytest.approx(3 / 5, abs=1e-12)
    assert noneq_measure(sigma) > noneq_measure(rho)
    assert guess_prob(sigma) > guess_prob(rho)


def test_half_half_example():
    rep = randomness_unitary(from_eigenvalues([0.5, 0.5, 0]))
    assert rep.indices == (1, 0, 2)
    assert rep.delta_star == pytest.approx(0.25)
    np.testing.assert_allclose(rep.sigma_a.matrix, np.diag([0.75, 0.25, 0]), atol=1e-12)
    assert rep.p_guess_before == pytest.approx(2 / 3)
    assert rep.p_guess_after == pytest.approx((math.sqrt(0.75) + 0.5) ** 2 / 3)
    assert rep.gain == pytest.approx(math.sqrt(2) - math.sqrt(0.75) - 0.5, abs=1e-12)


@pytest.mark.parametrize("d", [3, 4, 5])
def test_swap_concentrates_and_randomizes(d, rng):
    for _ in range(60):
        rho = random_state(d, rng)
        if delta_p(rho) <= 1e-9:
            continue
        rep = randomness_unitary(rho)
        assert rep.delta_star > 0
        assert rep.p_after > rep.p_before
        assert rep.p_guess_after < rep.p_guess_before
        assert rep.gain == pytest.approx(trace_sqrt(rho) - trace_sqrt(rep.sigma_a), abs=1e-9)
        u = rep.unitary
        assert np.max(np.abs(u.conj().T @ u - np.eye(d * d))) <= 1e-9


def test_effective_qubit_randomness(rng):
    for d in (3, 4):
        for p in (0.55, 0.7, 0.9):
            assert randomness_gain(effective_qubit(p, d)) > 0


def test_no_construction_without_gain(rng):
    with pytest.raises(NoConstructionError):
        randomness_unitary(random_state(2, rng))
    with pytest.raises(NoConstructionError):
        randomness_unitary(maximally_mixed(3))
    with pytest.raises(NoConstructionError):
        randomness_unitary(from_eigenvalues([0.5, 0.25, 0.25]))
