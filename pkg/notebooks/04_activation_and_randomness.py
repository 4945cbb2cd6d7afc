"""
Activation by correlations, and concentrating randomness
========================================================

Two copies that are not independent can do better than two product copies.
With the purification of rho shared between A and B, the gain on A becomes
-log2 of rho's largest eigenvalue, even for qubits.
"""

from inconc import activation_delta, delta_p, entanglement_advantage, from_eigenvalues, isotropic, noneq_measure
from inconc.correlations import activation_demo
from inconc.randomness import guess_prob, order_counterexample, randomness_unitary
from inconc.states import purified_mixture

rho = from_eigenvalues([0.7, 0.3])
print("product gain:", delta_p(rho))
print("with purification:", activation_delta(rho), "extra:", entanglement_advantage(rho))
print("simulated:", activation_demo(purified_mixture(1.0, rho)).delta_p)

# Isotropic qubit pairs have maximally mixed marginals yet still gain.
for p in (0.001, 0.1, 1.0):
    print(f"isotropic p={p}: gain {activation_demo(isotropic(p, 2)).delta_p:.6f}")

# Randomness: a larger P does not mean a state is easier to guess.
sigma, tau = order_counterexample()
print(f"P: {noneq_measure(sigma):.6f} > {noneq_measure(tau):.6f}")
print(f"guessing probability: {guess_prob(sigma):.6f} > {guess_prob(tau):.6f}")

# A single swap in the eigenbasis raises P and lowers the guessing probability.
rep = randomness_unitary(from_eigenvalues([0.5, 0.3, 0.2]))
print("swap indices (i*, j*, k*):", rep.indices, " delta*:", rep.delta_star)
print(f"P {rep.p_before:.6f} -> {rep.p_after:.6f}")
print(f"guess {rep.p_guess_before:.6f} -> {rep.p_guess_after:.6f}")
