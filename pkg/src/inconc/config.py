"""Central numerical tolerances.

Every module reads its thresholds from a :class:`Tolerances` record. The
default record honours the ``INCONC_TOLERANCE`` environment variable, which
overrides the equality tolerance only.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_VAR = "INCONC_TOLERANCE"


@dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-9
    trace: float = 1e-9
    psd: float = 1e-10  # eigenvalues down to -psd are clamped to zero
    equality: float = 1e-10
    unitarity: float = 1e-9
    gram_schmidt: float = 1e-8
    entropy_clamp: float = 1e-12
    max_sweeps: int = 100

    def with_validation(self, tol: float) -> "Tolerances":
        """Loosen (or tighten) the state-validation thresholds at once."""
        return replace(self, hermiticity=tol, trace=tol, psd=tol)


def _from_env() -> Tolerances:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return Tolerances()
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a float, got {raw!r}") from None
    if not value > 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return Tolerances(equality=value)


DEFAULT = _from_env()


def resolve(tol: Tolerances | None) -> Tolerances:
    return DEFAULT if tol is None else tol
