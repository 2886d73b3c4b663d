"""Compare measured decay rates against the theoretical bounds.

Three experiments on the degree-30 continuous Hahn configuration:

1. all-zeros (parity-symmetric) start: every fitted slope should clear
   both the plain bound and the improved parity-symmetric bound;
2. broken-symmetry start (all coordinates at 3): some coordinates
   overshoot their limits and decay slower than the improved bound;
3. the degree-15 Wilson configuration from zeros.

Writes log10-error trajectories as CSV next to this script when --outdir
is given.
"""

import argparse
import csv
import os

import numpy as np

from orthoflow import (
    ContinuousHahnParams,
    FlowFamily,
    FlowSettings,
    PotentialKind,
    WilsonParams,
    kappa_continuous_hahn,
    kappa_continuous_hahn_symmetric,
    kappa_wilson,
    measure_decay,
    solve_roots,
)

SETTINGS = FlowSettings(step=0.05, t_max=30.0, grad_tol=1e-13)
WINDOW = (5.0, 25.0)


def dump_logerr(path, traj, eq):
    err = np.abs(traj.states - eq[None, :])
    logerr = np.log10(np.maximum(err, 1e-300))
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["t"] + [f"log10err_{j}" for j in range(1, eq.size + 1)])
        for t, row in zip(traj.times, logerr):
            writer.writerow([f"{t:.17g}"] + [f"{v:.17g}" for v in row])


def report(label, traj, eq, bounds):
    rep = measure_decay(traj, eq, window=WINDOW)
    slopes = rep.measured_slopes
    print(f"== {label} ==")
    print(f"  R_n = {rep.R_n:.4f}")
    for name, value in bounds.items():
        above = int(np.count_nonzero(slopes > value))
        print(f"  {name} = {value:.4f}  ({above}/{slopes.size} slopes above)")
    print(f"  slopes: min {np.min(slopes):.4f}, median {np.median(slopes):.4f}, "
          f"max {np.max(slopes):.4f}")
    err = np.abs(traj.states - eq[None, :])
    overshoot = np.count_nonzero(
        [np.any(np.diff(err[:, j]) > 1e-10) for j in range(eq.size)]
    )
    print(f"  coordinates with non-monotone error curves: {overshoot}")
    print()
    return traj, eq


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", help="directory for log-error CSV files")
    args = parser.parse_args()

    ch_params = ContinuousHahnParams(10.0, 0.3)
    ch_kind = PotentialKind(FlowFamily.CONTINUOUS_HAHN, ch_params)
    w_params = WilsonParams(17.0 / 3.0, 0.2, 1 + 1j, 1 - 1j)
    w_kind = PotentialKind(FlowFamily.WILSON, w_params)

    runs = {}
    traj, eq = solve_roots(ch_kind, 30, settings=SETTINGS, newton_tol=1e-12)
    r_n = float(np.max(np.abs(eq)))
    bounds = {
        "kappa (plain)": kappa_continuous_hahn(ch_params, r_n),
        "kappa (parity-symmetric)": kappa_continuous_hahn_symmetric(ch_params, 30, r_n),
    }
    runs["ch30_zeros"] = report("CH n=30, zeros start", traj, eq, bounds)

    traj, eq = solve_roots(
        ch_kind, 30, x0=np.full(30, 3.0), settings=SETTINGS, newton_tol=1e-12
    )
    runs["ch30_all3"] = report("CH n=30, broken-symmetry start (all 3)", traj, eq, bounds)

    traj, eq = solve_roots(w_kind, 15, settings=SETTINGS, newton_tol=1e-12)
    r_n = float(np.max(np.abs(eq)))
    runs["w15_zeros"] = report(
        "Wilson n=15, zeros start", traj, eq,
        {"kappa": kappa_wilson(w_params, 15, r_n)},
    )

    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        for name, (traj, eq) in runs.items():
            path = os.path.join(args.outdir, f"{name}.logerr.csv")
            dump_logerr(path, traj, eq)
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
