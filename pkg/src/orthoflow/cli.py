"""Command-line front end: compute roots, run flows, verify, measure rates.

Exit codes are stable contracts: 0 success, 2 parameter validation failure,
3 numerical failure. Complex parameter literals use the form ``re+imi`` /
``re-imi``; rational literals like ``17/3`` are accepted and evaluated in
binary floating point at parse time.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from .errors import OrthoflowError, ParameterError
from .flow import FlowSettings, solve_roots
from .jacobi_baseline import jacobi_kappa
from .oracle import full_verify, min_eigenvalue_symmetric
from .params import ContinuousHahnParams, Family, JacobiParams, WilsonParams
from .potentials import FlowFamily, PotentialKind, hessian
from .rates import (
    kappa_continuous_hahn,
    kappa_continuous_hahn_symmetric,
    kappa_wilson,
    measure_decay,
)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

_FAMILIES = ("ch", "wilson", "jacobi", "ch-even", "ch-odd")

_VERIFY_TOL = {
    "root_mismatch": 1e-6,
    "max_bethe_residual": 1e-6,
    "max_diff_eq_residual": 1e-6,
}


def _parse_real(text: str) -> float:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def parse_number(text: str) -> complex:
    """Parse a real, rational (p/q) or complex (re+imi) literal."""
    text = text.strip()
    if text and text[-1] in "iI":
        body = text[:-1]
        # split before the sign of the imaginary part (skip exponent signs)
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "eE":
                re_part = _parse_real(body[:pos])
                im_text = body[pos:]
                im_part = float(im_text) if im_text not in ("+", "-") else float(im_text + "1")
                return complex(re_part, im_part)
        return complex(0.0, float(body) if body not in ("", "+", "-") else float(body + "1"))
    return complex(_parse_real(text), 0.0)


def _parse_init_list(text: str, n: int) -> np.ndarray:
    """Comma-separated coordinates; a token ``VALxCOUNT`` repeats VAL."""
    values: list[float] = []
    for token in text.split(","):
        token = token.strip()
        if "x" in token and not token.endswith("x"):
            val, count = token.rsplit("x", 1)
            values.extend([_parse_real(val)] * int(count))
        else:
            values.append(_parse_real(token))
    if len(values) != n:
        raise ParameterError(f"--x0 supplies {len(values)} coordinates, expected {n}")
    return np.array(values)


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise ParameterError(f"family {args.family} requires --{name}")


def _build_kind(args) -> PotentialKind:
    fam = args.family
    if fam in ("ch", "ch-even", "ch-odd"):
        _require(args, ["a", "b"])
        params = ContinuousHahnParams(parse_number(args.a), parse_number(args.b))
        family = {
            "ch": FlowFamily.CONTINUOUS_HAHN,
            "ch-even": FlowFamily.REDUCED_EVEN,
            "ch-odd": FlowFamily.REDUCED_ODD,
        }[fam]
        return PotentialKind(family, params)
    if fam == "wilson":
        _require(args, ["a", "b", "c", "d"])
        params = WilsonParams(*(parse_number(getattr(args, k)) for k in "abcd"))
        return PotentialKind(FlowFamily.WILSON, params)
    _require(args, ["alpha", "beta"])
    params = JacobiParams(_parse_real(args.alpha), _parse_real(args.beta))
    return PotentialKind(FlowFamily.JACOBI, params)


def _initial_condition(args, kind: PotentialKind) -> np.ndarray:
    n = args.n
    if args.init == "custom":
        if args.x0 is None:
            raise ParameterError("--init custom requires --x0")
        x0 = _parse_init_list(args.x0, n)
    elif args.init == "equispaced":
        j = np.arange(1, n + 1)
        x0 = -1.0 + 2.0 * j / (n + 1)
    else:  # zeros
        if kind.family is FlowFamily.JACOBI:
            raise ParameterError("init=zeros is invalid for the Jacobi domain (-1, 1)")
        x0 = np.zeros(n)
    if kind.family is FlowFamily.JACOBI:
        if np.any(np.diff(x0) <= 0) or np.any(np.abs(x0) >= 1):
            raise ParameterError(
                "Jacobi initial conditions must be strictly increasing inside (-1, 1)"
            )
    return x0


def _settings(args, record_every: int = 1) -> FlowSettings:
    return FlowSettings(
        step=args.step, t_max=args.t_max, grad_tol=args.grad_tol, record_every=record_every
    )


def _precision(args) -> int:
    env = os.environ.get("ORTHOFLOW_PRECISION")
    if env is not None:
        return int(env)
    return args.precision


def _params_dict(kind: PotentialKind) -> dict:
    p = kind.params
    if isinstance(p, JacobiParams):
        return {"alpha": p.alpha, "beta": p.beta}
    if isinstance(p, WilsonParams):
        return {k: _cnum(getattr(p, k)) for k in "abcd"}
    return {"a": _cnum(p.a), "b": _cnum(p.b)}


def _cnum(z: complex):
    return z.real if z.imag == 0 else {"re": z.real, "im": z.imag}


def _kappa_bound(kind: PotentialKind, n: int, eq: np.ndarray) -> float:
    r_n = float(np.max(np.abs(eq))) if eq.size else 0.0
    fam = kind.family
    if fam is FlowFamily.CONTINUOUS_HAHN:
        return kappa_continuous_hahn(kind.params, r_n)
    if fam is FlowFamily.WILSON:
        return kappa_wilson(kind.params, n, r_n)
    if fam is FlowFamily.JACOBI:
        return jacobi_kappa(kind.params, n)
    n_full = 2 * n if fam is FlowFamily.REDUCED_EVEN else 2 * n + 1
    return kappa_continuous_hahn_symmetric(kind.params, n_full, r_n)


def _write_rows(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def cmd_roots(args) -> int:
    kind = _build_kind(args)
    x0 = _initial_condition(args, kind)
    settings = FlowSettings(
        step=args.step, t_max=min(args.t_max, 10.0), grad_tol=1e-10, record_every=10
    )
    _, eq = solve_roots(kind, args.n, x0=x0, settings=settings, newton_tol=args.grad_tol)
    roots = np.sort(eq)
    prec = _precision(args)
    for idx, root in enumerate(roots, start=1):
        print(f"x[{idx}] = {root:.{prec}f}")
    if args.output:
        payload = {
            "family": args.family,
            "n": args.n,
            "params": _params_dict(kind),
            "roots": roots.tolist(),
            "kappa_bound": _kappa_bound(kind, args.n, eq),
            "hessian_min_eigenvalue": min_eigenvalue_symmetric(hessian(kind, eq))
            if args.n
            else None,
        }
        if args.format == "csv":
            _write_rows(args.output, ["index", "root"], enumerate(roots.tolist(), 1))
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
    return EXIT_OK


def cmd_flow(args) -> int:
    kind = _build_kind(args)
    x0 = _initial_condition(args, kind)
    settings = _settings(args)
    traj, eq = solve_roots(kind, args.n, x0=x0, settings=settings)
    n = args.n
    header = ["t"] + [f"x{j}" for j in range(1, n + 1)]
    rows = [[f"{t:.17g}"] + [f"{v:.17g}" for v in state] for t, state in zip(traj.times, traj.states)]
    _write_rows(args.output, header, rows)

    err = np.abs(traj.states - eq[None, :])
    logerr = np.log10(np.maximum(err, 1e-300))
    base = args.output[:-4] if args.output.endswith(".csv") else args.output
    header = ["t"] + [f"log10err_{j}" for j in range(1, n + 1)]
    rows = [[f"{t:.17g}"] + [f"{v:.17g}" for v in row] for t, row in zip(traj.times, logerr)]
    _write_rows(base + ".logerr.csv", header, rows)
    print(f"wrote {len(traj.times)} samples to {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.family not in ("ch", "wilson"):
        raise ParameterError("verify supports families ch and wilson")
    kind = _build_kind(args)
    family = Family.CH if args.family == "ch" else Family.WILSON
    report = full_verify(family, kind.params, args.n)
    payload = {
        "family": args.family,
        "n": args.n,
        "params": _params_dict(kind),
        "max_bethe_residual": report.max_bethe_residual,
        "max_diff_eq_residual": report.max_diff_eq_residual,
        "root_mismatch": report.root_mismatch,
        "hessian_min_eigenvalue": report.hessian_min_eigenvalue,
    }
    print(json.dumps(payload, indent=2))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    for key, tol in _VERIFY_TOL.items():
        if payload[key] > tol:
            print(f"verification failed: {key} = {payload[key]:.3e} > {tol:.0e}", file=sys.stderr)
            return EXIT_NUMERICAL
    return EXIT_OK


def cmd_rate(args) -> int:
    kind = _build_kind(args)
    x0 = _initial_condition(args, kind)
    settings = _settings(args)
    traj, eq = solve_roots(kind, args.n, x0=x0, settings=settings)
    window = tuple(args.window) if args.window else None
    report = measure_decay(traj, eq, window)
    payload = {
        "family": args.family,
        "n": args.n,
        "params": _params_dict(kind),
        "kappa_bound": report.kappa_bound,
        "measured_slopes": report.measured_slopes.tolist(),
        "fit_window": list(report.fit_window),
        "R_n": report.R_n,
    }
    if args.family == "ch" and x0.size and np.max(np.abs(x0 + x0[::-1])) == 0.0:
        payload["kappa_bound_symmetric"] = kappa_continuous_hahn_symmetric(
            kind.params, args.n, report.R_n
        )
    print(json.dumps(payload, indent=2))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthoflow",
        description="Roots of continuous Hahn, Wilson and Jacobi polynomials "
        "via globally stable gradient flows.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "roots": cmd_roots,
        "flow": cmd_flow,
        "verify": cmd_verify,
        "rate": cmd_rate,
    }
    for name, func in commands.items():
        sp = sub.add_parser(name)
        sp.set_defaults(func=func)
        sp.add_argument("--family", choices=_FAMILIES, required=True)
        sp.add_argument("--n", type=int, required=True)
        for flag in ("--a", "--b", "--c", "--d", "--alpha", "--beta"):
            sp.add_argument(flag)
        sp.add_argument("--init", choices=("zeros", "equispaced", "custom"), default=None)
        sp.add_argument("--x0", help="comma-separated coordinates; VALxCOUNT repeats")
        sp.add_argument("--t-max", dest="t_max", type=float, default=30.0)
        sp.add_argument("--step", type=float, default=0.05)
        sp.add_argument("--grad-tol", dest="grad_tol", type=float, default=1e-10)
        sp.add_argument("--window", nargs=2, type=float, default=None)
        sp.add_argument("--output")
        sp.add_argument("--format", choices=("csv", "json"), default="json")
        sp.add_argument("--precision", type=int, default=4)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.n < 0:
        print("error: n must be nonnegative", file=sys.stderr)
        return EXIT_VALIDATION
    if args.init is None:
        args.init = "equispaced" if args.family == "jacobi" else "zeros"
    if args.command == "flow" and not args.output:
        print("error: flow requires --output", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except (ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OrthoflowError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
