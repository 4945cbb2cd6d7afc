"""Dense complex linear-algebra kernel.

Matrices are plain ``numpy`` arrays. The Hermitian eigensolver is a cyclic
Jacobi method using the round-robin (tournament) ordering, so that each
round applies ``n // 2`` disjoint rotations as one matrix product. The
dimensions used in this package stay below ~36, where Jacobi's accuracy and
determinism matter more than its cubic-per-sweep cost.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import (
    ConvergenceError,
    DimensionError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
)

__all__ = [
    "Spectrum",
    "allclose",
    "entropy_bits",
    "hermitian_eig",
    "kron",
    "op_norm",
    "partial_trace",
    "psd_sqrt",
    "check_hermitian",
]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted non-increasing, eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def allclose(a, b, atol: float | None = None) -> bool:
    """Entrywise comparison with the central absolute tolerance."""
    if atol is None:
        atol = config.DEFAULT.equality
    a = np.asarray(a)
    b = np.asarray(b)
    return a.shape == b.shape and bool(np.all(np.abs(a - b) <= atol))


def _as_square(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {m.shape}")
    return m


def check_hermitian(m, tol: float | None = None) -> np.ndarray:
    m = _as_square(m)
    if tol is None:
        tol = config.DEFAULT.hermiticity
    dev = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if dev > tol:
        raise NotHermitianError(f"matrix is not Hermitian: max |H - H^dag| = {dev:.3e}")
    return m


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings for one sweep; every (p, q) with p < q appears exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def hermitian_eig(h, max_sweeps: int | None = None, tol: config.Tolerances | None = None) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Raises ``NotSquareError``, ``NotHermitianError`` or ``ConvergenceError``.
    """
    tol = config.resolve(tol)
    h = check_hermitian(h, tol.hermiticity)
    if max_sweeps is None:
        max_sweeps = tol.max_sweeps
    n = h.shape[0]
    a = 0.5 * (h + h.conj().T)
    v = np.eye(n, dtype=complex)
    if n > 1:
        rounds = _round_robin(n)
        offmask = ~np.eye(n, dtype=bool)
        scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)
        target = 1e-15 * scale
        converged = False
        for _ in range(max_sweeps + 1):
            off = float(np.sqrt(np.sum(np.abs(a[offmask]) ** 2)))
            if off <= target:
                converged = True
                break
            for p, q in rounds:
                hpq = a[p, q]
                mag = np.abs(hpq)
                live = mag > 1e-300
                if not np.any(live):
                    continue
                phase = np.where(live, np.exp(-1j * np.angle(hpq)), 1.0)
                app = a[p, p].real
                aqq = a[q, q].real
                safe = np.where(live, mag, 1.0)
                theta = (aqq - app) / (2.0 * safe)
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
                t = np.where(theta == 0.0, 1.0, t)
                t = np.where(live, t, 0.0)
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * phase
                g[q, q] = c * phase
                a = g.conj().T @ a @ g
                v = v @ g
            a = 0.5 * (a + a.conj().T)
        if not converged:
            raise ConvergenceError(f"Jacobi did not converge within {max_sweeps} sweeps (off-norm {off:.3e})")
    w = a.diagonal().real.copy()
    order = np.argsort(-w, kind="stable")
    return Spectrum(eigenvalues=w[order], eigenvectors=v[:, order])


def eigvals(h, tol: config.Tolerances | None = None) -> np.ndarray:
    """Eigenvalues only, non-increasing. Diagonal input skips the solver."""
    h = _as_square(h)
    if not np.any(h - np.diag(np.diag(h))):
        check_hermitian(h, config.resolve(tol).hermiticity)
        return np.sort(h.diagonal().real)[::-1]
    return hermitian_eig(h, tol=tol).eigenvalues


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def partial_trace(m, d_a: int, d_b: int, keep: str = "A") -> np.ndarray:
    """Trace out one factor of a matrix on ``C^d_a (x) C^d_b``.

    ``keep`` is ``"A"`` (trace over B) or ``"B"`` (trace over A).
    """
    m = np.asarray(m)
    n = d_a * d_b
    if m.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix for dims ({d_a}, {d_b}), got {m.shape}")
    t = m.reshape(d_a, d_b, d_a, d_b)
    keep = keep.upper()
    if keep == "A":
        return np.einsum("ibjb->ij", t)
    if keep == "B":
        return np.einsum("aiaj->ij", t)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def psd_sqrt(m, tol: config.Tolerances | None = None) -> np.ndarray:
    """Principal square root of a PSD matrix.

    Eigenvalues in ``[-tol.psd, 0)`` are treated as zero, as are positive ones
    below the solver's resolution; anything below ``-tol.psd`` raises ``NotPSDError``.
    """
    tol = config.resolve(tol)
    spec = hermitian_eig(m, tol=tol)
    w = spec.eigenvalues
    if w.size and w[-1] < -tol.psd:
        raise NotPSDError(f"matrix has eigenvalue {w[-1]:.3e} < -{tol.psd:g}")
    # Below n * eps * ||M|| the solver cannot resolve an eigenvalue, and sqrt
    # would blow that noise up to ~1e-8.
    floor = len(w) * np.finfo(float).eps * (abs(w[0]) if w.size else 0.0)
    root = np.sqrt(np.where(w <= floor, 0.0, w))
    v = spec.eigenvectors
    out = (v * root) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def op_norm(m, tol: config.Tolerances | None = None) -> float:
    """Largest eigenvalue magnitude of a Hermitian matrix."""
    w = eigvals(m, tol=tol)
    return float(max(abs(w[0]), abs(w[-1])))


def entropy_bits(eigenvalues, clamp: float | None = None) -> float:
    """Shannon entropy in bits of a spectrum; tiny |x| are treated as 0."""
    if clamp is None:
        clamp = config.DEFAULT.entropy_clamp
    x = np.asarray(eigenvalues, dtype=float)
    x = np.where(np.abs(x) <= clamp, 0.0, x)
    x = x[x > 0]
    return float(-np.sum(x * np.log2(x)))
