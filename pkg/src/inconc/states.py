"""Density matrices, validation, the state families used throughout, and the
JSON state format shared with the command line."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from . import config
from .errors import DimensionError, StateValidationError
from .linalg import Spectrum, hermitian_eig, partial_trace

__all__ = [
    "BipartiteState",
    "DensityMatrix",
    "as_state",
    "dephased_pure",
    "effective_qubit",
    "from_eigenvalues",
    "isotropic",
    "load_state",
    "maximally_mixed",
    "product",
    "purified_mixture",
    "state_from_json",
    "state_to_json",
    "validate",
]


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated state. Build through :func:`validate` or a constructor."""

    matrix: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @cached_property
    def spectrum(self) -> Spectrum:
        m = self.matrix
        if not np.any(m - np.diag(np.diag(m))):
            # Diagonal fast path: eigenvectors are permuted basis vectors.
            w = m.diagonal().real
            order = np.argsort(-w, kind="stable")
            return Spectrum(w[order].copy(), np.eye(self.dim, dtype=complex)[:, order])
        return hermitian_eig(m)

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.spectrum.eigenvalues

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, eigenvalues={np.round(self.eigenvalues, 6).tolist()})"


@dataclass(frozen=True, eq=False, repr=False)
class BipartiteState(DensityMatrix):
    d_a: int = 0
    d_b: int = 0

    def marginal(self, keep: str) -> DensityMatrix:
        return DensityMatrix(_hermitize(partial_trace(self.matrix, self.d_a, self.d_b, keep)))

    @property
    def marginal_a(self) -> DensityMatrix:
        return self.marginal("A")

    @property
    def marginal_b(self) -> DensityMatrix:
        return self.marginal("B")


def _hermitize(m: np.ndarray) -> np.ndarray:
    return 0.5 * (m + m.conj().T)


def validate(m, tol: config.Tolerances | None = None) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity; raise a structured error."""
    tol = config.resolve(tol)
    m = np.array(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise StateValidationError("shape", float("nan"), f"expected a non-empty square matrix, got shape {m.shape}")
    herm = float(np.max(np.abs(m - m.conj().T)))
    if herm > tol.hermiticity:
        raise StateValidationError("hermitian", herm)
    m = _hermitize(m)
    tr = float(np.trace(m).real)
    if abs(tr - 1.0) > tol.trace:
        raise StateValidationError("trace", abs(tr - 1.0), f"trace is {tr!r}, expected 1")
    state = DensityMatrix(m)
    low = float(state.eigenvalues[-1])
    if low < -tol.psd:
        raise StateValidationError("psd", -low, f"negative eigenvalue {low:.3e}")
    return state


def validate_bipartite(m, d_a: int, d_b: int, tol: config.Tolerances | None = None) -> BipartiteState:
    base = validate(m, tol)
    if base.dim != d_a * d_b:
        raise DimensionError(f"joint dimension {base.dim} != {d_a}*{d_b}")
    return BipartiteState(base.matrix, d_a=d_a, d_b=d_b)


def as_state(x, tol: config.Tolerances | None = None) -> DensityMatrix:
    """Accept a ``DensityMatrix`` unchanged, otherwise validate an array-like."""
    if isinstance(x, DensityMatrix):
        return x
    return validate(x, tol)


def from_eigenvalues(probs, tol: config.Tolerances | None = None) -> DensityMatrix:
    """``diag(probs)``, in the order given."""
    tol = config.resolve(tol)
    p = np.asarray(probs, dtype=float).ravel()
    if p.size == 0:
        raise StateValidationError("shape", float("nan"), "empty probability vector")
    if np.any(p < 0):
        raise StateValidationError("psd", float(-p.min()), "negative probability")
    if abs(p.sum() - 1.0) > tol.trace:
        raise StateValidationError("trace", abs(p.sum() - 1.0), f"probabilities sum to {p.sum()!r}")
    return DensityMatrix(np.diag(p).astype(complex))


def maximally_mixed(d: int) -> DensityMatrix:
    return DensityMatrix(np.eye(d, dtype=complex) / d)


def _check_probability(p: float, lo: float = 0.0, hi: float = 1.0, name: str = "p") -> float:
    p = float(p)
    if not (lo <= p <= hi):
        raise ValueError(f"{name} must lie in [{lo}, {hi}], got {p}")
    return p


def effective_qubit(p: float, d: int) -> DensityMatrix:
    """``p|0><0| + (1-p)|1><1|`` embedded in dimension ``d``."""
    p = _check_probability(p, 0.5, 1.0)
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    probs = np.zeros(d)
    probs[0], probs[1] = p, 1.0 - p
    return DensityMatrix(np.diag(probs).astype(complex))


def _projector(vec: np.ndarray) -> np.ndarray:
    return np.outer(vec, vec.conj())


def product(rho, eta) -> BipartiteState:
    rho, eta = as_state(rho), as_state(eta)
    return BipartiteState(np.kron(rho.matrix, eta.matrix), d_a=rho.dim, d_b=eta.dim)


def isotropic(p: float, d: int) -> BipartiteState:
    """``p |Phi+><Phi+| + (1-p) I/d^2`` with ``|Phi+> = sum_i |ii> / sqrt(d)``."""
    p = _check_probability(p)
    phi = np.zeros(d * d, dtype=complex)
    phi[[i * d + i for i in range(d)]] = 1.0 / math.sqrt(d)
    m = p * _projector(phi) + (1.0 - p) * np.eye(d * d) / (d * d)
    return BipartiteState(m, d_a=d, d_b=d)


def purification(rho) -> np.ndarray:
    """``sum_i sqrt(a_i) |u_i>|u_i>`` over the eigenbasis of ``rho``."""
    rho = as_state(rho)
    spec = rho.spectrum
    amps = np.sqrt(np.clip(spec.eigenvalues, 0.0, None))
    u = spec.eigenvectors
    return np.einsum("k,ik,jk->ij", amps, u, u).reshape(-1)


def purified_mixture(p: float, rho) -> BipartiteState:
    """``p |rho><rho| + (1-p) rho (x) rho``."""
    p = _check_probability(p)
    rho = as_state(rho)
    psi = purification(rho)
    m = p * _projector(psi) + (1.0 - p) * np.kron(rho.matrix, rho.matrix)
    return BipartiteState(_hermitize(m), d_a=rho.dim, d_b=rho.dim)


def dephased_pure(p: float, psi, d: int | None = None) -> DensityMatrix:
    """``p |psi><psi| + (1-p) I/d``."""
    p = _check_probability(p)
    psi = np.asarray(psi, dtype=complex).ravel()
    if d is None:
        d = psi.size
    if psi.size != d:
        raise DimensionError(f"psi has {psi.size} entries, expected {d}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"psi must be normalized, |psi| = {norm}")
    return DensityMatrix(_hermitize(p * _projector(psi) + (1.0 - p) * np.eye(d) / d))


# --- JSON state format ---------------------------------------------------------
#
#   {"dim": d, "matrix": [[{"re": x, "im": y}, ...], ...]}   or
#   {"eigenvalues": [p0, p1, ...]}


def state_to_json(state, diagonal: bool = False) -> dict:
    state = as_state(state)
    if diagonal:
        return {"eigenvalues": [float(x) for x in state.matrix.diagonal().real]}
    rows = [[{"re": float(z.real), "im": float(z.imag)} for z in row] for row in state.matrix]
    return {"dim": state.dim, "matrix": rows}


def _entry(z) -> complex:
    if isinstance(z, dict):
        return complex(float(z.get("re", 0.0)), float(z.get("im", 0.0)))
    if isinstance(z, (int, float)):
        return complex(z)
    raise ValueError(f"matrix entry must be a number or {{re, im}} object, got {z!r}")


def state_from_json(obj: dict, tol: config.Tolerances | None = None) -> DensityMatrix:
    if not isinstance(obj, dict):
        raise ValueError("state JSON must be an object")
    if "eigenvalues" in obj:
        return from_eigenvalues([float(x) for x in obj["eigenvalues"]], tol)
    if "matrix" not in obj:
        raise ValueError("state JSON needs either 'eigenvalues' or 'matrix'")
    m = np.array([[_entry(z) for z in row] for row in obj["matrix"]], dtype=complex)
    if "dim" in obj and m.shape != (int(obj["dim"]), int(obj["dim"])):
        raise ValueError(f"'dim' is {obj['dim']} but matrix has shape {m.shape}")
    return validate(m, tol)


def load_state(path, tol: config.Tolerances | None = None) -> DensityMatrix:
    """Read a state file. ``json.JSONDecodeError``/``ValueError`` on bad syntax,
    ``StateValidationError`` when the matrix is not a state."""
    text = Path(path).read_text(encoding="utf-8")
    return state_from_json(json.loads(text), tol)


def dump_state(state, path, diagonal: bool = False) -> None:
    Path(path).write_text(json.dumps(state_to_json(state, diagonal)) + "\n", encoding="utf-8")
