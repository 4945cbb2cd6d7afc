"""Command-line interface.

Exit codes:
    0  success
    1  ``verify`` found a failing property
    2  unreadable or malformed input (bad JSON, bad arguments)
    3  the input matrix is not a valid state
    4  operation not available for this dimension (``--unitary simple`` with d < 3)
    5  output file could not be written
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from . import config
from .concentration import concentrate, delta_p, is_bound, noneq_measure
from .correlations import (
    P_PLUS,
    activation_delta,
    activation_demo,
    entanglement_advantage,
    mpemba_compare,
    mpemba_scan,
    von_neumann_entropy,
)
from .errors import DimensionError, NoConstructionError, StateValidationError
from .randomness import guess_prob, randomness_unitary
from .states import load_state, purified_mixture
from .sweep import PANELS, write_sweep
from .verify import FAULTS, run_verification

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_INVALID, EXIT_UNSUPPORTED, EXIT_IO = range(6)


class UsageError(Exception):
    pass


def _round(obj):
    """Twelve significant digits for every float in a JSON-able structure."""
    if isinstance(obj, float) or isinstance(obj, np.floating):
        return float(f"{float(obj) + 0.0:.12g}")
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _round(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _matrix_json(m: np.ndarray) -> list:
    return [[{"re": z.real, "im": z.imag} for z in row] for row in np.asarray(m, dtype=complex)]


def _emit(payload: dict, pretty: bool) -> None:
    payload = _round(payload)
    if not pretty:
        print(json.dumps(payload))
        return
    width = max(len(k) for k in payload)
    for k, v in payload.items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            print(f"{k}:")
            for row in v:
                print("  " + "  ".join(f"{rk}={rv}" for rk, rv in row.items()))
        else:
            print(f"{k:<{width}}  {v}")


def _tolerances(args) -> config.Tolerances:
    if args.tolerance is None:
        return config.DEFAULT
    return config.DEFAULT.with_validation(args.tolerance)


def _load(args):
    return load_state(args.state, _tolerances(args))


def cmd_measure(args) -> int:
    rho = _load(args)
    _emit(
        {
            "dim": rho.dim,
            "P": noneq_measure(rho),
            "spectrum": rho.eigenvalues,
            "S": von_neumann_entropy(rho),
            "p_guess": guess_prob(rho),
            "bound": is_bound(rho),
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_concentrate(args) -> int:
    rho = _load(args)
    if args.unitary == "simple" and rho.dim < 3:
        raise DimensionError("--unitary simple needs d >= 3")
    rep = concentrate(rho, args.unitary)
    out = {
        "dim": rho.dim,
        "unitary_kind": args.unitary,
        "delta_p": delta_p(rho),
        "achieved_gain": rep.delta_p,
        "p_before": rep.p_before,
        "p_after": rep.p_after,
        "p_after_B": rep.p_after_b,
        "sigma_A_spectrum": rep.sigma_a.eigenvalues,
        "sigma_B_spectrum": rep.sigma_b.eigenvalues,
        "mutual_information": max(0.0, rep.mutual_information),
    }
    if args.json:
        out["unitary"] = _matrix_json(rep.unitary)
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        n = write_sweep(args.out, args.step, args.panel, args.full_triangle, args.workers)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    _emit({"rows": n, "panel": args.panel, "step": args.step, "out": str(args.out)}, args.pretty)
    return EXIT_OK


def _check_p(p: float) -> float:
    if not 0.5 <= p <= 1.0:
        raise UsageError(f"p must lie in [1/2, 1], got {p}")
    return p


def cmd_mpemba(args) -> int:
    if args.scan is not None:
        rows = mpemba_scan(args.scan, _check_p(args.reference))
        inverted = [r.p1 for r in rows if r.inversion]
        _emit(
            {
                "reference": args.reference,
                "step": args.scan,
                "inversion_count": len(inverted),
                "inversion_region": [min(inverted), max(inverted)] if inverted else None,
                "contains_p_plus": bool(inverted) and min(inverted) <= P_PLUS <= max(inverted),
                "rows": [
                    {"p": r.p1, "P_in": r.input_measure_1, "P_out_B": r.output_measure_1, "inversion": r.inversion}
                    for r in rows
                ],
            },
            args.pretty,
        )
        return EXIT_OK
    p1 = P_PLUS if args.p1 is None else args.p1
    p2 = 0.5 if args.p2 is None else args.p2
    cmp = mpemba_compare(_check_p(p1), _check_p(p2))
    _emit(asdict(cmp), args.pretty)
    return EXIT_OK


def cmd_activate(args) -> int:
    rho = _load(args)
    if not 0.0 <= args.p <= 1.0:
        raise UsageError(f"--p must lie in [0, 1], got {args.p}")
    rep = activation_demo(purified_mixture(args.p, rho))
    _emit(
        {
            "dim": rho.dim,
            "p": args.p,
            "delta_p": delta_p(rho),
            "activation_delta": activation_delta(rho),
            "entanglement_advantage": entanglement_advantage(rho),
            "P_before": noneq_measure(rho),
            "P_after": rep.p_after,
            "simulated_gain": rep.delta_p,
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_randomness(args) -> int:
    rho = _load(args)
    try:
        rep = randomness_unitary(rho)
    except NoConstructionError as exc:
        _emit({"dim": rho.dim, "construction": False, "reason": str(exc), "p_guess": guess_prob(rho)}, args.pretty)
        return EXIT_OK
    i, j, k = rep.indices
    _emit(
        {
            "dim": rho.dim,
            "construction": True,
            "i_star": i,
            "j_star": j,
            "k_star": k,
            "delta_star": rep.delta_star,
            "P_before": rep.p_before,
            "P_after": rep.p_after,
            "p_guess_before": rep.p_guess_before,
            "p_guess_after": rep.p_guess_after,
            "trace_sqrt_gain": rep.gain,
        },
        args.pretty,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        dims = tuple(int(x) for x in args.dims.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--dims must be a comma-separated list of integers, got {args.dims!r}") from None
    if not dims or min(dims) < 2 or max(dims) > 6:
        raise UsageError("--dims entries must lie in [2, 6]")
    summary = run_verification(dims, args.trials, args.seed, args.inject_fault)
    print(json.dumps(_round(summary), indent=2 if args.pretty else None))
    if not summary["passed"]:
        for s in summary["suites"]:
            if not s["passed"]:
                print(
                    f"FAIL {s['name']}: max deviation {s['max_deviation']:.3e} > {s['tolerance']:g} "
                    f"(reproduce with --seed {s['seed']}, trial {s['failing_trial']})",
                    file=sys.stderr,
                )
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inconc", description="Informational non-equilibrium concentration toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--tolerance", type=float, default=None, help="validation tolerance for noisy input states")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="P, spectrum, entropy, guessing probability")
    p.add_argument("state")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("concentrate", parents=[common], help="optimal concentration on two copies")
    p.add_argument("state")
    p.add_argument("--unitary", choices=("optimal", "simple"), default="optimal")
    p.add_argument("--json", action="store_true", help="include the full unitary in the output")
    p.set_defaults(func=cmd_concentrate)

    p = sub.add_parser("sweep-qutrit", parents=[common], help="qutrit simplex sweep to CSV")
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--out", required=True)
    p.add_argument("--panel", choices=PANELS, default="a")
    p.add_argument("--full-triangle", action="store_true", help="every barycentric point, not just a0>=a1>=a2")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("mpemba", parents=[common], help="B-side purity inversion under the qutrit swap")
    p.add_argument("--p1", type=float)
    p.add_argument("--p2", type=float)
    p.add_argument("--scan", type=float, metavar="STEP")
    p.add_argument("--reference", type=float, default=0.5)
    p.set_defaults(func=cmd_mpemba)

    p = sub.add_parser("activate", parents=[common], help="concentration activated by the purification")
    p.add_argument("state")
    p.add_argument("--p", type=float, default=1.0, help="weight of the purification in the mixture")
    p.set_defaults(func=cmd_activate)

    p = sub.add_parser("randomness", parents=[common], help="randomness-concentrating swap")
    p.add_argument("state")
    p.set_defaults(func=cmd_randomness)

    p = sub.add_parser("verify", parents=[common], help="oracle cross-checks on random states")
    p.add_argument("--dims", default="2,3,4")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StateValidationError as exc:
        print(json.dumps({"error": "invalid state", **exc.report()}), file=sys.stderr)
        return EXIT_INVALID
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (UsageError, ValueError, KeyError, TypeError, OSError) as exc:
        # json.JSONDecodeError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
