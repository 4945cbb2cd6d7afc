"""Seeded random states and unitaries for tests, oracles and verification runs."""

from __future__ import annotations

import numpy as np

from .states import DensityMatrix


def haar_unitaries(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` Haar-random ``n x n`` unitaries (QR of a Ginibre matrix, phases fixed)."""
    z = (rng.standard_normal((count, n, n)) + 1j * rng.standard_normal((count, n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=1, axis2=2)
    return q * (diag / np.abs(diag))[:, None, :]


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    return haar_unitaries(n, 1, rng)[0]


def random_spectrum(d: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform point of the probability simplex, sorted non-increasing."""
    return np.sort(rng.dirichlet(np.ones(d)))[::-1]


def random_spectra(d: int, count: int, rng: np.random.Generator) -> np.ndarray:
    return np.sort(rng.dirichlet(np.ones(d), size=count), axis=1)[:, ::-1]


def random_state(d: int, rng: np.random.Generator, rotate: bool = True) -> DensityMatrix:
    """Random spectrum, optionally in a Haar-random eigenbasis."""
    a = random_spectrum(d, rng)
    if not rotate:
        return DensityMatrix(np.diag(a).astype(complex))
    u = haar_unitary(d, rng)
    m = (u * a) @ u.conj().T
    return DensityMatrix(0.5 * (m + m.conj().T))


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (x + x.conj().T)
