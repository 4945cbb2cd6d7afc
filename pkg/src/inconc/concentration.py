"""Concentrating informational non-equilibrium into one half of ``rho (x) eta``.

The measure is ``P(rho) = log2(d * ||rho||_inf)``. Its best achievable value
on subsystem A after a global unitary equals ``log2(d_A * KF_{d_B}(rho_A (x) eta_B))``
where ``KF_K`` is the Ky Fan K-norm (sum of the K largest eigenvalues). For two
copies of the same qudit state the optimal gain is therefore

    delta_p(rho) = log2(KF_d(rho (x) rho) / ||rho||_inf).

All logarithms are base 2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import DimensionError, NotUnitaryError
from .linalg import Spectrum, eigvals, entropy_bits, hermitian_eig
from .states import BipartiteState, DensityMatrix, as_state, product, validate_bipartite

__all__ = [
    "ConcentrationReport",
    "ZERO_GAIN",
    "concentrate",
    "delta_p",
    "evolve_and_trace",
    "is_bound",
    "ky_fan",
    "max_relocation",
    "noneq_measure",
    "optimal_unitary",
    "product_spectrum",
    "qutrit_delta_p",
    "relocation_unitary",
    "simple_unitary",
]

# Gains below this many bits are reported as exactly zero.
ZERO_GAIN = 1e-12


@dataclass(frozen=True)
class ConcentrationReport:
    delta_p: float
    p_before: float
    p_after: float
    unitary: np.ndarray
    sigma_a: DensityMatrix
    sigma_b: DensityMatrix
    sigma_ab: BipartiteState
    mutual_information: float

    @property
    def p_after_b(self) -> float:
        return noneq_measure(self.sigma_b)


def noneq_measure(rho) -> float:
    """``log2(d * ||rho||_inf)`` in bits."""
    rho = as_state(rho)
    return max(0.0, float(np.log2(rho.dim * rho.eigenvalues[0])))


def ky_fan(m, k: int) -> float:
    """Sum of the ``k`` largest eigenvalues of a Hermitian matrix."""
    if isinstance(m, DensityMatrix):
        w = m.eigenvalues
    else:
        w = eigvals(m)
    if not 1 <= k <= len(w):
        raise ValueError(f"K must be in [1, {len(w)}], got {k}")
    return float(np.sum(w[:k]))


def _sorted_probs(x) -> np.ndarray:
    if isinstance(x, Spectrum):
        return np.asarray(x.eigenvalues, dtype=float)
    if isinstance(x, DensityMatrix):
        return x.eigenvalues
    return np.sort(np.asarray(x, dtype=float))[::-1]


def product_spectrum(a, b=None) -> tuple[np.ndarray, np.ndarray]:
    """All products ``a_i * b_j`` sorted non-increasing.

    Ties keep lexicographic ``(i, j)`` order. Returns ``(values, pairs)`` with
    ``pairs[k] = (i, j)``, indices referring to the descending order of ``a``
    and ``b``.
    """
    a = _sorted_probs(a)
    b = a if b is None else _sorted_probs(b)
    flat = np.outer(a, b).ravel()
    order = np.argsort(-flat, kind="stable")
    pairs = np.stack(np.divmod(order, len(b)), axis=1)
    return flat[order], pairs


def delta_p(rho) -> float:
    """Optimal gain in bits of ``P`` on A for the input ``rho (x) rho``."""
    rho = as_state(rho)
    a = rho.eigenvalues
    c, _ = product_spectrum(a)
    gain = float(np.log2(np.sum(c[: rho.dim]) / a[0]))
    return gain if gain > ZERO_GAIN else 0.0


def max_relocation(rho_a, eta_b) -> float:
    """``max_U 2**P(tr_B[U (rho_A (x) eta_B) U^dag]) = d_A * KF_{d_B}(rho_A (x) eta_B)``."""
    rho_a, eta_b = as_state(rho_a), as_state(eta_b)
    c, _ = product_spectrum(rho_a.eigenvalues, eta_b.eigenvalues)
    return rho_a.dim * float(np.sum(c[: eta_b.dim]))


def qutrit_delta_p(spec) -> float:
    """``log2(a0 + 2 a1)`` for a qutrit spectrum (sorted internally)."""
    a = _sorted_probs(spec)
    if a.size != 3:
        raise DimensionError(f"qutrit formula needs 3 eigenvalues, got {a.size}")
    gain = float(np.log2(a[0] + 2.0 * a[1]))
    return gain if gain > ZERO_GAIN else 0.0


def is_bound(rho, tol: float = 1e-9) -> bool:
    """Resourceful, not pure, and yet no concentration is possible."""
    rho = as_state(rho)
    a0 = rho.eigenvalues[0]
    if a0 >= 1.0 - tol or a0 <= 1.0 / rho.dim + tol:
        return False
    return delta_p(rho) <= tol


def _gram_schmidt_complete(cols: np.ndarray, threshold: float) -> np.ndarray:
    """Extend orthonormal columns to a unitary using standard basis vectors in order."""
    n = cols.shape[0]
    basis = [c for c in cols.T]
    for k in range(n):
        if len(basis) == n:
            break
        w = np.zeros(n, dtype=complex)
        w[k] = 1.0
        for _ in range(2):  # second pass fixes cancellation
            for q in basis:
                w = w - q * np.vdot(q, w)
        norm = np.linalg.norm(w)
        if norm > threshold:
            basis.append(w / norm)
    return np.stack(basis, axis=1)


def relocation_unitary(kappas: np.ndarray, d_a: int, d_b: int, tol: config.Tolerances | None = None) -> np.ndarray:
    """Unitary ``U`` with ``U^dag |0>|n> = |kappa_n>`` for ``n < d_b``.

    The remaining inputs go, in index order, to the Gram-Schmidt completion
    of ``{kappa_n}``. Then ``U^dag (|0><0| (x) I) U`` projects onto span{kappa}.
    """
    tol = config.resolve(tol)
    n = d_a * d_b
    kappas = np.asarray(kappas, dtype=complex)
    if kappas.shape != (n, d_b):
        raise DimensionError(f"expected {d_b} vectors of length {n}, got {kappas.shape}")
    u_dag = _gram_schmidt_complete(kappas, tol.gram_schmidt)
    return u_dag.conj().T


def _top_product_vectors(rho_a: DensityMatrix, eta_b: DensityMatrix, k: int) -> np.ndarray:
    _, pairs = product_spectrum(rho_a.eigenvalues, eta_b.eigenvalues)
    ua = rho_a.spectrum.eigenvectors
    ub = eta_b.spectrum.eigenvectors
    return np.stack([np.kron(ua[:, i], ub[:, j]) for i, j in pairs[:k]], axis=1)


def optimal_unitary(rho_a, eta_b=None) -> np.ndarray:
    """A global unitary attaining :func:`max_relocation` for ``rho_a (x) eta_b``.

    The eigenvectors of ``rho_a (x) eta_b`` belonging to its ``d_B`` largest
    eigenvalues are rotated onto ``|0>_A (x) |n>_B``.
    """
    rho_a = as_state(rho_a)
    eta_b = rho_a if eta_b is None else as_state(eta_b)
    kappas = _top_product_vectors(rho_a, eta_b, eta_b.dim)
    return relocation_unitary(kappas, rho_a.dim, eta_b.dim)


def simple_unitary(d: int) -> np.ndarray:
    """Permutation on ``C^d (x) C^d`` swapping ``|1,0>`` and ``|0,2>``."""
    if d < 3:
        raise DimensionError(f"the |10> <-> |02> swap needs d >= 3, got {d}")
    perm = np.arange(d * d)
    perm[[d, 2]] = perm[[2, d]]
    return np.eye(d * d, dtype=complex)[perm]


def _check_unitary(u: np.ndarray, tol: float) -> None:
    dev = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
    if dev > tol:
        raise NotUnitaryError(f"U^dag U deviates from identity by {dev:.3e}")


def evolve_and_trace(joint, u, tol: config.Tolerances | None = None) -> ConcentrationReport:
    """Apply ``u`` to a bipartite state and report what happens on each side.

    ``joint`` is a :class:`BipartiteState` or a ``(rho_a, eta_b)`` pair.
    ``delta_p`` is the achieved change of ``P`` on A, not the optimum.
    """
    tol = config.resolve(tol)
    s_in = None
    if isinstance(joint, tuple):
        rho_a, eta_b = as_state(joint[0]), as_state(joint[1])
        # The joint entropy is unitarily invariant and additive on products,
        # which avoids diagonalizing the d_A*d_B output.
        s_in = entropy_bits(rho_a.eigenvalues) + entropy_bits(eta_b.eigenvalues)
        joint = product(rho_a, eta_b)
    if not isinstance(joint, BipartiteState):
        raise TypeError("joint must be a BipartiteState or a (rho_a, eta_b) tuple")
    u = np.asarray(u, dtype=complex)
    if u.shape != joint.matrix.shape:
        raise DimensionError(f"unitary shape {u.shape} does not match state {joint.matrix.shape}")
    _check_unitary(u, tol.unitarity)
    out = u @ joint.matrix @ u.conj().T
    sigma_ab = BipartiteState(0.5 * (out + out.conj().T), d_a=joint.d_a, d_b=joint.d_b)
    sigma_a, sigma_b = sigma_ab.marginal_a, sigma_ab.marginal_b
    p_before = noneq_measure(joint.marginal_a)
    p_after = noneq_measure(sigma_a)
    if s_in is None:
        s_in = entropy_bits(joint.eigenvalues)
    mi = entropy_bits(sigma_a.eigenvalues) + entropy_bits(sigma_b.eigenvalues) - s_in
    return ConcentrationReport(
        delta_p=p_after - p_before,
        p_before=p_before,
        p_after=p_after,
        unitary=u,
        sigma_a=sigma_a,
        sigma_b=sigma_b,
        sigma_ab=sigma_ab,
        mutual_information=mi,
    )


def in_eigenbasis(u: np.ndarray, rho: DensityMatrix) -> np.ndarray:
    """Conjugate a unitary written in ``rho``'s sorted eigenbasis back to the computational basis."""
    w = rho.spectrum.eigenvectors
    ww = np.kron(w, w)
    return ww @ u @ ww.conj().T


def concentrate(rho, unitary: str = "optimal") -> ConcentrationReport:
    """Run ``rho (x) rho`` through the optimal unitary or the fixed qutrit swap."""
    rho = as_state(rho)
    if unitary == "optimal":
        u = optimal_unitary(rho)
    elif unitary == "simple":
        u = in_eigenbasis(simple_unitary(rho.dim), rho)
    else:
        raise ValueError(f"unitary must be 'optimal' or 'simple', got {unitary!r}")
    return evolve_and_trace((rho, rho), u)


def joint_relocation_unitary(joint: BipartiteState) -> np.ndarray:
    """Relocation unitary for a possibly correlated joint state.

    The ``d_B`` dominant eigenvectors of ``joint`` are sent to ``|0>|n>``;
    in particular the top eigenvector lands on ``|00>``.
    """
    spec = hermitian_eig(joint.matrix)
    return relocation_unitary(spec.eigenvectors[:, : joint.d_b], joint.d_a, joint.d_b)


def joint_max_relocation(joint: BipartiteState) -> float:
    return joint.d_a * float(np.sum(joint.eigenvalues[: joint.d_b]))


def as_bipartite(m, d_a: int, d_b: int) -> BipartiteState:
    if isinstance(m, BipartiteState):
        return m
    return validate_bipartite(m, d_a, d_b)
