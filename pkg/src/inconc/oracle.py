"""Brute-force ground truth for the closed forms.

Nothing here calls the Jacobi solver or the sorted-product shortcut used by
:mod:`inconc.concentration`; spectra come from ``numpy.linalg.eigvalsh`` and
optima from explicit enumeration or sampling.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .errors import OracleSizeError
from .linalg import Spectrum
from .sampling import haar_unitaries
from .states import DensityMatrix, as_state

__all__ = [
    "ky_fan_bruteforce",
    "permutation_search",
    "random_unitary_search",
    "random_unitary_search_many",
]

MAX_PRODUCT_DIM = 36
MAX_SUBSETS = 2_000_000


def _values(x) -> np.ndarray:
    if isinstance(x, Spectrum):
        return np.asarray(x.eigenvalues, dtype=float)
    if isinstance(x, DensityMatrix):
        return np.linalg.eigvalsh(x.matrix)
    x = np.asarray(x)
    if x.ndim == 2:
        return np.linalg.eigvalsh(x)
    return x.astype(float)


@lru_cache(maxsize=64)
def _subsets(n: int, k: int) -> np.ndarray:
    return np.array(list(combinations(range(n), k)), dtype=np.intp).reshape(-1, k)


def ky_fan_bruteforce(spec_a, spec_b, k: int) -> float:
    """Max over every ``k``-subset of the ``d_A * d_B`` eigenvalue products."""
    prods = np.outer(_values(spec_a), _values(spec_b)).ravel()
    n = prods.size
    if n > MAX_PRODUCT_DIM:
        raise OracleSizeError(f"d_A*d_B = {n} exceeds the cap of {MAX_PRODUCT_DIM}")
    if not 1 <= k <= n:
        raise ValueError(f"K must be in [1, {n}], got {k}")
    if comb(n, k) > MAX_SUBSETS:
        raise OracleSizeError(f"C({n}, {k}) subsets is too many to enumerate")
    return float(prods[_subsets(n, k)].sum(axis=1).max())


def random_unitary_search(rho_a, eta_b, samples: int, seed: int, batch: int = 2048) -> float:
    """Best ``P(sigma_A)`` in bits over ``samples`` Haar-random global unitaries.

    A stochastic lower bound on the true optimum.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rho_a, eta_b = as_state(rho_a), as_state(eta_b)
    d_a, d_b = rho_a.dim, eta_b.dim
    joint = np.kron(rho_a.matrix, eta_b.matrix)
    rng = np.random.default_rng(seed)
    best = -np.inf
    done = 0
    while done < samples:
        m = min(batch, samples - done)
        u = haar_unitaries(d_a * d_b, m, rng)
        out = u @ joint @ u.conj().transpose(0, 2, 1)
        sigma_a = np.einsum("sibjb->sij", out.reshape(m, d_a, d_b, d_a, d_b))
        top = np.linalg.eigvalsh(sigma_a)[:, -1]
        best = max(best, float(top.max()))
        done += m
    return float(np.log2(d_a * best))


def random_unitary_search_many(spectra_a, spectra_b, samples: int, seed: int, batch: int = 256) -> np.ndarray:
    """:func:`random_unitary_search` for many same-sized pairs, sharing the draws.

    Haar measure is invariant under the eigenbasis rotation of
    ``rho_a (x) eta_b``, so only the spectra matter. ``spectra_a`` has shape
    ``(S, d_A)`` and ``spectra_b`` shape ``(S, d_B)``; returns ``S`` values in bits.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    sa = np.atleast_2d(np.asarray(spectra_a, dtype=float))
    sb = np.atleast_2d(np.asarray(spectra_b, dtype=float))
    d_a, d_b = sa.shape[1], sb.shape[1]
    n = d_a * d_b
    x = np.einsum("si,sj->sij", sa, sb).reshape(len(sa), n)
    rng = np.random.default_rng(seed)
    best = np.full(len(sa), -np.inf)
    done = 0
    while done < samples:
        m = min(batch, samples - done)
        u = haar_unitaries(n, m, rng).reshape(m, d_a, d_b, n)
        # frames[m, k, i, j] = sum_b u[(i, b), k] conj(u[(j, b), k])
        frames = np.einsum("mibk,mjbk->mkij", u, u.conj())
        sigma_a = np.einsum("sk,mkij->smij", x, frames)
        top = np.linalg.eigvalsh(sigma_a)[..., -1]
        best = np.maximum(best, top.max(axis=1))
        done += m
    return np.log2(d_a * best)


def permutation_search(rho, d: int | None = None) -> tuple[float, tuple[int, ...]]:
    """Exact best gain of ``P`` on A over product-basis permutations.

    Only the choice of which ``d`` products end up in the ``|0>_A`` block
    matters, so that is what is enumerated. Works in the eigenbasis of
    ``rho``. Returns ``(gain_bits, perm)`` where ``perm[x]`` is the image of
    basis index ``x``.
    """
    rho = as_state(rho)
    if d is None:
        d = rho.dim
    if d != rho.dim:
        raise ValueError(f"d = {d} does not match state dimension {rho.dim}")
    if d > 4:
        raise OracleSizeError(f"permutation search is capped at d = 4, got {d}")
    a = np.sort(np.linalg.eigvalsh(rho.matrix))[::-1]
    pops = np.outer(a, a).ravel()
    n = d * d
    target = list(range(d))  # indices of |0, m>
    best_val, best_perm = -np.inf, tuple(range(n))
    for chosen in combinations(range(n), d):
        incoming = [x for x in chosen if x not in target]
        outgoing = [x for x in target if x not in chosen]
        perm = list(range(n))
        for x, y in zip(incoming, outgoing):
            perm[x], perm[y] = y, x
        moved = np.empty(n)
        moved[perm] = pops
        val = moved.reshape(d, d).sum(axis=1).max()
        if val > best_val + 1e-15:
            best_val, best_perm = val, tuple(perm)
    gain = float(np.log2(best_val / a[0]))
    return max(gain, 0.0), best_perm
