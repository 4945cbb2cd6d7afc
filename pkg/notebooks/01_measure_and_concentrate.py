"""
Measuring and concentrating non-equilibrium
===========================================

A state is out of equilibrium when it differs from I/d. ``noneq_measure``
reports how far, in bits, as log2(d * largest eigenvalue). Two copies of a
state can be rotated jointly so that one side ends up further from I/d.
"""

import numpy as np

from inconc import concentrate, delta_p, from_eigenvalues, maximally_mixed, noneq_measure

# The two extremes: equilibrium sits at 0, a pure qutrit at log2(3).
print("I/3    :", noneq_measure(maximally_mixed(3)))
print("pure   :", noneq_measure(from_eigenvalues([1, 0, 0])), "=", np.log2(3))

# Take a qutrit that is an even mixture of two levels.
rho = from_eigenvalues([0.5, 0.5, 0.0])
print("P(rho) :", noneq_measure(rho))

# ``delta_p`` is the best gain any joint unitary can give one copy.
print("best gain:", delta_p(rho), "= log2(3/2)")

# ``concentrate`` builds that unitary, applies it and traces out B.
rep = concentrate(rho)
print("sigma_A spectrum:", np.round(rep.sigma_a.eigenvalues, 6))
print("P before/after  :", rep.p_before, rep.p_after)
print("mutual information created:", rep.mutual_information)

# The fixed swap |10> <-> |02> does equally well on every qutrit.
simple = concentrate(rho, "simple")
print("simple swap gain:", simple.delta_p)

# Qubits never gain, whatever the spectrum.
for p in (0.55, 0.75, 0.95):
    print(f"qubit p={p}: gain {delta_p(from_eigenvalues([p, 1 - p]))}")
