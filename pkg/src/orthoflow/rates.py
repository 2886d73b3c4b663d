"""Theoretical exponential-rate bounds and empirical decay-rate fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InsufficientSamples
from .jacobi_baseline import jacobi_kappa
from .params import ContinuousHahnParams, WilsonParams
from .potentials import FlowFamily
from .flow import Trajectory

#: errors below this floor are numerical noise and excluded from fits
_ERROR_FLOOR = 10.0 * np.finfo(float).eps


@dataclass(frozen=True)
class RateReport:
    kappa_bound: float
    measured_slopes: np.ndarray
    fit_window: tuple[float, float]
    R_n: float

    def __post_init__(self):
        if self.kappa_bound <= 0:
            raise ValueError("kappa_bound must be positive")


def _param_term(a: complex, r: float) -> float:
    return a.real / (a.real**2 + (r + abs(a.imag)) ** 2)


def kappa_continuous_hahn(p: ContinuousHahnParams, r_n: float) -> float:
    """Right endpoint of the admissible decay-rate interval (full flow)."""
    if r_n < 0:
        raise ValueError("R_n must be nonnegative")
    return _param_term(p.a, r_n) + _param_term(p.b, r_n)


def kappa_wilson(p: WilsonParams, n: int, r_n: float) -> float:
    """Right endpoint of the Wilson decay-rate interval."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if r_n < 0:
        raise ValueError("R_n must be nonnegative")
    crowd = 2.0 * (n - 1) / (1.0 + 4.0 * r_n * r_n)
    return crowd + sum(_param_term(e, r_n) for e in p.values)


def kappa_continuous_hahn_symmetric(p: ContinuousHahnParams, n: int, r_n: float) -> float:
    """Improved rate endpoint valid for parity-symmetric initial conditions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if r_n < 0:
        raise ValueError("R_n must be nonnegative")
    crowd = 2.0 * (n // 2) / (1.0 + 4.0 * r_n * r_n)
    parity = (1.0 - (-1.0) ** n) / (2.0 + 2.0 * r_n * r_n)
    return crowd + _param_term(p.a, r_n) + _param_term(p.b, r_n) + parity


def _kappa_for_trajectory(traj: Trajectory, n: int, r_n: float) -> float:
    fam = traj.kind.family
    p = traj.kind.params
    if fam is FlowFamily.CONTINUOUS_HAHN:
        return kappa_continuous_hahn(p, r_n)
    if fam is FlowFamily.WILSON:
        return kappa_wilson(p, n, r_n)
    if fam is FlowFamily.JACOBI:
        return jacobi_kappa(p, n)
    n_full = 2 * n if fam is FlowFamily.REDUCED_EVEN else 2 * n + 1
    return kappa_continuous_hahn_symmetric(p, n_full, r_n)


def measure_decay(
    traj: Trajectory, equilibrium, window: tuple[float, float] | None = None
) -> RateReport:
    """Fit per-coordinate slopes of log|x_j(t) - x_j*| inside the window.

    Slopes are negated so positive values mean decay. Samples with error at
    the numerical noise floor are excluded; fewer than 5 usable samples for
    any coordinate raises InsufficientSamples.
    """
    eq = np.asarray(equilibrium, dtype=float)
    t = traj.times
    if eq.size != traj.states.shape[1]:
        raise ValueError("equilibrium length does not match trajectory states")
    if window is None:
        window = (t[-1] / 6.0, 5.0 * t[-1] / 6.0)
    w0, w1 = window
    if not (t[0] <= w0 < w1 <= t[-1]):
        raise ValueError(f"window {window} outside trajectory time range")

    in_window = (t >= w0) & (t <= w1)
    err = np.abs(traj.states - eq[None, :])
    slopes = np.empty(eq.size)
    for jdx in range(eq.size):
        usable = in_window & (err[:, jdx] > _ERROR_FLOOR)
        if np.count_nonzero(usable) < 5:
            raise InsufficientSamples(
                f"coordinate {jdx + 1} has fewer than 5 samples above the noise floor"
            )
        slope, _ = np.polyfit(t[usable], np.log(err[usable, jdx]), 1)
        slopes[jdx] = -slope

    r_n = float(np.max(np.abs(eq))) if eq.size else 0.0
    kappa = _kappa_for_trajectory(traj, eq.size, r_n)
    return RateReport(kappa, slopes, (float(w0), float(w1)), r_n)
