"""
Bound non-equilibrium and a Mpemba-like inversion
=================================================

Some mixed states carry non-equilibrium that cannot be concentrated at all.
For qutrits this only happens when the two smaller eigenvalues coincide, so a
tiny perturbation frees it.
"""

import numpy as np

from inconc import delta_p, dephased_pure, from_eigenvalues, is_bound, noneq_measure
from inconc.correlations import P_PLUS, mpemba_compare, mpemba_scan

psi = np.array([1, 1, 1]) / np.sqrt(3)
rho = dephased_pure(0.4, psi)
print("P(rho) =", noneq_measure(rho), " gain =", delta_p(rho), " bound:", is_bound(rho))

a = np.sort(rho.eigenvalues)[::-1]
eps = 1e-6
nudged = from_eigenvalues([a[0], a[1] + eps, a[2] - eps])
print("after nudging by 1e-6, gain =", delta_p(nudged))

# Under the fixed qutrit swap, a purer input can leave B more mixed.
cmp = mpemba_compare(P_PLUS, 0.5)
print(f"input  P: {cmp.input_measure_1:.6f} (p = {P_PLUS:.6f}) vs {cmp.input_measure_2:.6f} (p = 1/2)")
print(f"output P on B: {cmp.output_measure_1:.6f} vs {cmp.output_measure_2:.6f}")
print("inversion:", cmp.inversion)

region = [r.p1 for r in mpemba_scan(0.001) if r.inversion]
print(f"inverting p lie in [{min(region):.3f}, {max(region):.3f}], 1/sqrt(2) = {1 / np.sqrt(2):.3f}")
