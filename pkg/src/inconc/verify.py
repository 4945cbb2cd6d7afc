"""Cross-check the closed forms against the oracles on seeded random states.

Each suite records the largest deviation it saw against a fixed tolerance.
``fault="ky_fan"`` perturbs the analytic Ky Fan norm by 1e-6 so that the
machinery can be seen to fail loudly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .concentration import (
    ZERO_GAIN,
    concentrate,
    delta_p,
    ky_fan,
    noneq_measure,
    qutrit_delta_p,
)
from .oracle import ky_fan_bruteforce, permutation_search
from .randomness import guess_prob, randomness_unitary, trace_sqrt
from .sampling import random_state
from .states import DensityMatrix

FAULTS = ("ky_fan",)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    trials: int
    seed: int
    failing_trial: int | None = None


class _Suite:
    def __init__(self, name: str, tol: float, seed: int):
        self.name, self.tol, self.seed = name, tol, seed
        self.worst = 0.0
        self.trials = 0
        self.failing: int | None = None

    def record(self, deviation: float) -> None:
        deviation = float(abs(deviation))
        if not np.isfinite(deviation):
            deviation = float("inf")
        if deviation > self.tol and self.failing is None:
            self.failing = self.trials
        self.worst = max(self.worst, deviation)
        self.trials += 1

    def flag(self, ok: bool) -> None:
        self.record(0.0 if ok else float("inf"))

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.failing is None, self.worst, self.tol, self.trials, self.seed, self.failing)


def run_verification(dims=(2, 3, 4), trials: int = 200, seed: int = 0, fault: str | None = None) -> dict:
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")

    def kf(m, k):
        return ky_fan(m, k) + (1e-6 if fault == "ky_fan" else 0.0)

    suites: list[SuiteResult] = []
    for d in dims:
        rng = np.random.default_rng([seed, d])
        oracle = _Suite(f"ky_fan_oracle[d={d}]", 1e-10, seed)
        closed = _Suite(f"result2_closed_form[d={d}]", 1e-8, seed)
        attain = _Suite(f"optimal_unitary_attains[d={d}]", 1e-8, seed)
        bound = _Suite(f"delta_p_le_P[d={d}]", 1e-10, seed)
        both = _Suite(f"sum_gain_le_2P[d={d}]", 1e-9, seed)
        nogo = _Suite(f"qubit_no_go[d={d}]", 1e-12, seed) if d == 2 else None
        qutrit = _Suite(f"qutrit_closed_form[d={d}]", 1e-10, seed) if d == 3 else None
        perm = _Suite(f"permutation_oracle[d={d}]", 1e-9, seed) if d <= 4 else None
        rand = _Suite(f"randomness_concentration[d={d}]", 1e-9, seed) if d >= 3 else None
        for _ in range(trials):
            rho = random_state(d, rng, rotate=True)
            a = rho.eigenvalues
            joint = DensityMatrix(np.kron(rho.matrix, rho.matrix))
            k_an = kf(joint, d)
            if d * d <= 25:
                oracle.record(k_an - ky_fan_bruteforce(a, a, d))
            dp = delta_p(rho)
            expected = float(np.log2(k_an / a[0]))
            closed.record(dp - (expected if expected > ZERO_GAIN else 0.0))
            rep = concentrate(rho)
            attain.record(rep.p_after - np.log2(d * k_an))
            p = noneq_measure(rho)
            bound.record(max(0.0, dp - p))
            both.record(max(0.0, (rep.p_after - p) + (rep.p_after_b - p) - 2 * p))
            if nogo is not None:
                nogo.record(dp)
            if qutrit is not None:
                qutrit.record(dp - qutrit_delta_p(a))
            if perm is not None:
                perm.record(permutation_search(rho)[0] - dp)
            if rand is not None and dp > 1e-6:
                rr = randomness_unitary(rho)
                rand.flag(rr.p_after > rr.p_before + 1e-10 and rr.p_guess_after < rr.p_guess_before - 1e-10)
                rand.record(rr.gain - (trace_sqrt(rho) - trace_sqrt(rr.sigma_a)))
                rand.record(guess_prob(rr.sigma_a) - rr.p_guess_after)
        for s in (oracle, closed, attain, bound, both, nogo, qutrit, perm, rand):
            if s is not None and s.trials:
                suites.append(s.result())
    return {
        "passed": all(s.passed for s in suites),
        "dims": list(dims),
        "trials": trials,
        "seed": seed,
        "fault": fault,
        "suites": [asdict(s) for s in suites],
    }
