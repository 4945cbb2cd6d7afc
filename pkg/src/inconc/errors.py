"""Exception hierarchy. Everything derives from ``ValueError`` so callers that
only care about "bad input" can catch that."""


class InconcError(ValueError):
    pass


class NotSquareError(InconcError):
    pass


class NotHermitianError(InconcError):
    pass


class NotPSDError(InconcError):
    pass


class ConvergenceError(ArithmeticError):
    """Jacobi sweeps hit the configured cap before the off-diagonal norm vanished."""


class DimensionError(InconcError):
    pass


class NotUnitaryError(InconcError):
    pass


class StateValidationError(InconcError):
    """A matrix failed one of the density-matrix invariants.

    ``invariant`` is one of ``"hermitian"``, ``"trace"``, ``"psd"`` or
    ``"shape"``; ``deviation`` is how far past the threshold it was.
    """

    def __init__(self, invariant: str, deviation: float, message: str | None = None):
        self.invariant = invariant
        self.deviation = float(deviation)
        super().__init__(message or f"{invariant} violated by {self.deviation:.3e}")

    def report(self) -> dict:
        return {"invariant": self.invariant, "deviation": self.deviation, "message": str(self)}


class NoConstructionError(InconcError):
    """No concentration is possible, so the randomness permutation does not exist."""


class OracleSizeError(InconcError):
    pass
