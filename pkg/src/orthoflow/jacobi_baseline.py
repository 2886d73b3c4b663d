"""Electrostatic baseline for Jacobi roots: the mobility-weighted root
dynamics whose equilibrium is the Jacobi root configuration.

Unlike the other families this is not a plain gradient flow; the right-hand
side carries the factor 2 A(x) = 2 (x^2 - 1), so it gets its own rhs rather
than the generic -gradient path.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainViolation
from .params import JacobiParams


def electrostatic_rhs(p: JacobiParams, x) -> np.ndarray:
    """Right-hand side -B(x_j) - A(x_j) sum_{k != j} 2/(x_j - x_k).

    A(x) = x^2 - 1 and B(x) = (alpha+1)(x+1) + (beta+1)(x-1); equals
    2 A(x_j) times the electrostatic-potential gradient component.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if n == 0:
        return np.zeros(0)
    if np.any(np.diff(x) <= 0) or x[0] <= -1 or x[-1] >= 1:
        raise DomainViolation(
            "Jacobi configurations must be strictly increasing inside (-1, 1)"
        )
    a_mob = x * x - 1.0
    b_drift = (p.alpha + 1) * (x + 1.0) + (p.beta + 1) * (x - 1.0)
    d = x[:, None] - x[None, :]
    np.fill_diagonal(d, np.inf)
    return -b_drift - a_mob * np.sum(2.0 / d, axis=1)


def jacobi_kappa(p: JacobiParams, n: int) -> float:
    """Guaranteed exponential decay rate 2n + alpha + beta of the baseline flow."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 2.0 * n + p.alpha + p.beta


def equispaced_start(n: int) -> np.ndarray:
    """Equispaced interior grid -1 + 2j/(n+1), a valid ordered start."""
    j = np.arange(1, n + 1)
    return -1.0 + 2.0 * j / (n + 1)
