"""Morse potentials, gradients and Hessians for the five flow kinds.

Complex-parameter terms are evaluated through the principal branch of the
complex arctan/log and their real part is taken; with Re(a) > 0 the
arguments never touch the branch cuts, so the result is exactly the real
pair sum (no arctan addition formulas are used).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import BranchCrossing, DomainViolation
from .params import ContinuousHahnParams, JacobiParams, WilsonParams


class FlowFamily(Enum):
    CONTINUOUS_HAHN = "ch"
    WILSON = "wilson"
    JACOBI = "jacobi"
    REDUCED_EVEN = "ch-even"
    REDUCED_ODD = "ch-odd"


_PARAM_TYPES = {
    FlowFamily.CONTINUOUS_HAHN: ContinuousHahnParams,
    FlowFamily.WILSON: WilsonParams,
    FlowFamily.JACOBI: JacobiParams,
    FlowFamily.REDUCED_EVEN: ContinuousHahnParams,
    FlowFamily.REDUCED_ODD: ContinuousHahnParams,
}


@dataclass(frozen=True)
class PotentialKind:
    """A potential family together with its parameter record."""

    family: FlowFamily
    params: ContinuousHahnParams | WilsonParams | JacobiParams

    def __post_init__(self):
        expected = _PARAM_TYPES[self.family]
        if not isinstance(self.params, expected):
            raise TypeError(
                f"{self.family.value} expects {expected.__name__}, "
                f"got {type(self.params).__name__}"
            )


def antideriv_arctan(x):
    """Antiderivative of arctan vanishing at 0: x arctan(x) - log(1+x^2)/2."""
    x = np.asarray(x, dtype=float)
    return x * np.arctan(x) - 0.5 * np.log1p(x * x)


def _check_branch(*params: complex):
    for a in params:
        if a.real == 0:
            raise BranchCrossing(f"parameter {a} sits on the arctan branch cut")


def pair_arctan(x, a: complex, b: complex):
    """Real value of arctan(x/a) + arctan(x/b) for a real or conjugate pair."""
    _check_branch(complex(a), complex(b))
    x = np.asarray(x, dtype=float)
    return (np.arctan(x / complex(a)) + np.arctan(x / complex(b))).real


def _param_arctan_sum(x, params):
    _check_branch(*params)
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for a in params:
        out += np.arctan(x / a).real
    return out


def _param_antideriv_sum(x, params):
    # Re[ x arctan(x/a) - (a/2) log(1 + (x/a)^2) ], summed over parameters
    _check_branch(*params)
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for a in params:
        z = x / a
        out += (x * np.arctan(z) - 0.5 * a * np.log(1.0 + z * z)).real
    return out


def _param_lorentz_sum(x, params):
    # Re[ a / (a^2 + x^2) ], summed over parameters (x-derivative of arctan(x/a))
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for a in params:
        out += (a / (a * a + x * x)).real
    return out


def _jacobi_check(p: JacobiParams, x: np.ndarray):
    if x.size and (np.any(np.diff(x) <= 0) or x[0] <= -1 or x[-1] >= 1):
        raise DomainViolation(
            "Jacobi configurations must be strictly increasing inside (-1, 1)"
        )


def _kind_params(kind: PotentialKind):
    if kind.family is FlowFamily.WILSON:
        return kind.params.values
    return (kind.params.a, kind.params.b)


def potential(kind: PotentialKind, x) -> float:
    """Value of the Morse potential at a configuration."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if n == 0:
        return 0.0
    j = np.arange(1, n + 1)
    fam = kind.family

    if fam is FlowFamily.JACOBI:
        p = kind.params
        _jacobi_check(p, x)
        diffs = x[:, None] - x[None, :]
        iu = np.triu_indices(n, 1)
        v = -np.sum(np.log(-diffs[iu]))  # x increasing: x_j - x_k < 0 for j < k
        v -= np.sum(
            0.5 * (p.alpha + 1) * np.log(1.0 - x) + 0.5 * (p.beta + 1) * np.log(1.0 + x)
        )
        return float(v)

    params = _kind_params(kind)
    d = x[:, None] - x[None, :]
    iu = np.triu_indices(n, 1)
    v = float(np.sum(_param_antideriv_sum(x, params)))

    if fam is FlowFamily.CONTINUOUS_HAHN:
        v += float(np.sum(antideriv_arctan(d[iu])))
        v += float(0.5 * np.pi * np.sum((n + 1 - 2 * j) * x))
        return v

    s = x[:, None] + x[None, :]
    v += float(np.sum(antideriv_arctan(d[iu]) + antideriv_arctan(s[iu])))
    if fam is FlowFamily.WILSON:
        v -= float(np.pi * np.sum(j * x))
        return v

    # parity-reduced systems: self-interaction and half-integer/integer offsets
    v += float(np.sum(0.5 * antideriv_arctan(2.0 * x)))
    if fam is FlowFamily.REDUCED_EVEN:
        v -= float(np.pi * np.sum((j - 0.5) * x))
    else:
        v += float(np.sum(antideriv_arctan(x)))
        v -= float(np.pi * np.sum(j * x))
    return v


def gradient(kind: PotentialKind, x) -> np.ndarray:
    """Exact analytic gradient of the potential."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if n == 0:
        return np.zeros(0)
    j = np.arange(1, n + 1)
    fam = kind.family

    if fam is FlowFamily.JACOBI:
        p = kind.params
        _jacobi_check(p, x)
        d = x[:, None] - x[None, :]
        np.fill_diagonal(d, np.inf)
        g = -np.sum(1.0 / d, axis=1)
        g -= 0.5 * (p.alpha + 1) / (x - 1.0) + 0.5 * (p.beta + 1) / (x + 1.0)
        return g

    params = _kind_params(kind)
    d = x[:, None] - x[None, :]
    g = _param_arctan_sum(x, params) + np.sum(np.arctan(d), axis=1)

    if fam is FlowFamily.CONTINUOUS_HAHN:
        return g + 0.5 * np.pi * (n + 1 - 2 * j)

    s = x[:, None] + x[None, :]
    g += np.sum(np.arctan(s), axis=1)
    if fam is FlowFamily.WILSON:
        # the k = j term arctan(2 x_j) is excluded in the full Wilson flow
        return g - np.arctan(2.0 * x) - np.pi * j
    if fam is FlowFamily.REDUCED_EVEN:
        return g - np.pi * (j - 0.5)
    return g + np.arctan(x) - np.pi * j


def hessian(kind: PotentialKind, x) -> np.ndarray:
    """Symmetric Hessian matrix of the potential."""
    x = np.asarray(x, dtype=float)
    n = x.size
    if n == 0:
        return np.zeros((0, 0))
    fam = kind.family

    if fam is FlowFamily.JACOBI:
        p = kind.params
        _jacobi_check(p, x)
        d = x[:, None] - x[None, :]
        np.fill_diagonal(d, np.inf)
        cd = 1.0 / (d * d)
        h = -cd
        diag = np.sum(cd, axis=1)
        diag += 0.5 * (p.alpha + 1) / (x - 1.0) ** 2 + 0.5 * (p.beta + 1) / (x + 1.0) ** 2
        h[np.diag_indices(n)] = diag
        return h

    params = _kind_params(kind)
    d = x[:, None] - x[None, :]
    cd = 1.0 / (1.0 + d * d)

    if fam is FlowFamily.CONTINUOUS_HAHN:
        h = -cd
        diag = _param_lorentz_sum(x, params) + (np.sum(cd, axis=1) - 1.0)
        h[np.diag_indices(n)] = diag
        return h

    s = x[:, None] + x[None, :]
    cs = 1.0 / (1.0 + s * s)
    h = cs - cd
    diag = _param_lorentz_sum(x, params) + (np.sum(cd, axis=1) - 1.0)
    cs_self = 1.0 / (1.0 + 4.0 * x * x)
    if fam is FlowFamily.WILSON:
        diag += np.sum(cs, axis=1) - cs_self
    elif fam is FlowFamily.REDUCED_EVEN:
        diag += np.sum(cs, axis=1) + cs_self
    else:
        diag += np.sum(cs, axis=1) + cs_self + 1.0 / (1.0 + x * x)
    h[np.diag_indices(n)] = diag
    return h
