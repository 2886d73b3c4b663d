"""Monic continuous Hahn, Wilson and Jacobi polynomials from their
terminating hypergeometric series.

The series terms are accumulated as polynomial coefficient vectors. The
alternating terms cancel massively (tens of digits at degree 30), so the
accumulation runs in mpmath arbitrary precision scaled with the degree
and is converted to double-precision reals at the end. The conjugate-pair
parameter constraints guarantee the imaginary parts are pure roundoff,
which is asserted rather than silently truncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from mpmath import mp, mpc, mpf

from .errors import DegenerateParameters, PrecisionLoss
from .params import ContinuousHahnParams, JacobiParams, WilsonParams

#: absolute floor below which a Pochhammer denominator counts as vanished
_DEGENERACY_TOL = 1e-12

#: scaled tolerance for discarding imaginary coefficient residue
_IMAG_RESIDUE_TOL = 1e-9

#: default degree cap; companion-matrix verification degrades beyond this
MAX_DEGREE = 64


class VariableKind(Enum):
    X = "x"
    X_SQUARED = "x^2"


@dataclass(frozen=True)
class MonicPoly:
    """Real monic polynomial, coefficients ascending (coeffs[-1] == 1).

    ``variable_kind`` records whether the indeterminate is x or x**2
    (Wilson polynomials are monic in x**2).
    """

    coeffs: np.ndarray
    variable_kind: VariableKind = VariableKind.X

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d vector")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        if c[-1] != 1.0:
            raise ValueError("leading coefficient must be exactly 1")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1


def pochhammer(z: complex, k: int) -> complex:
    """Rising factorial z (z+1) ... (z+k-1); equals 1 for k = 0."""
    out = 1.0 + 0.0j
    for j in range(k):
        out *= z + j
    return out


def _mp_poch(z, k: int):
    out = mpc(1)
    for j in range(k):
        out *= z + j
    return out


def _check_denominators(factors, n: int):
    for z in factors:
        for j in range(n):
            if abs(complex(z) + j) < _DEGENERACY_TOL:
                raise DegenerateParameters(
                    f"Pochhammer factor ({complex(z)})_{n} vanishes at offset {j}"
                )


def _working_dps(n: int) -> int:
    # ~2 digits of cancellation per degree observed for the showcase-scale parameters
    return 30 + 2 * n


def _to_real(coeffs) -> np.ndarray:
    re = np.array([float(v.real) for v in coeffs])
    im = np.array([float(v.imag) for v in coeffs])
    bound = _IMAG_RESIDUE_TOL * (1.0 + np.abs(re))
    if np.any(np.abs(im) > bound):
        worst = float(np.max(np.abs(im) / bound))
        raise PrecisionLoss(
            f"imaginary coefficient residue exceeds tolerance ({worst:.2e}x)"
        )
    return re


def _monic(coeffs: np.ndarray, kind: VariableKind) -> MonicPoly:
    lead = coeffs[-1]
    if abs(lead) < _DEGENERACY_TOL:
        raise DegenerateParameters("leading coefficient vanishes")
    c = coeffs / lead
    c[-1] = 1.0
    return MonicPoly(c, kind)


def _check_degree(n: int):
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds double-precision cap {MAX_DEGREE}")


def _series_accumulate(n, factor_step, coeff_step):
    """Sum c_k * f_k(x) where f_k has ascending coefficients ``factor``.

    ``factor_step(factor, k)`` returns the coefficients of f_{k+1} from f_k;
    ``coeff_step(c, k)`` returns c_{k+1} from c_k.
    """
    acc = [mpc(0)] * (n + 1)
    factor = [mpc(1)]
    c = mpc(1)
    for k in range(n + 1):
        for idx, f in enumerate(factor):
            acc[idx] += c * f
        if k < n:
            factor = factor_step(factor, k)
            c = coeff_step(c, k)
    return acc


def monic_continuous_hahn(n: int, p: ContinuousHahnParams) -> MonicPoly:
    """Monic symmetric continuous Hahn polynomial of degree n in x.

    Expands the terminating 3F2 series term by term as a complex
    polynomial in x and converts to real coefficients.
    """
    _check_degree(n)
    if n == 0:
        return MonicPoly(np.array([1.0]))
    _check_denominators(
        [p.a + p.a.conjugate(), p.a + p.b.conjugate()], n
    )
    s0 = p.a + p.a.conjugate() + p.b + p.b.conjugate()
    _check_denominators([n + s0 - 1], n)

    with mp.workdps(_working_dps(n)):
        a, b = mpc(p.a), mpc(p.b)
        e1 = a + a.conjugate()
        e2 = a + b.conjugate()
        s = e1 + b + b.conjugate()

        def factor_step(factor, k):  # multiply by (a + k) + i x
            new = [mpc(0)] * (len(factor) + 1)
            for idx, f in enumerate(factor):
                new[idx] += f * (a + k)
                new[idx + 1] += f * 1j
            return new

        def coeff_step(c, k):
            return c * (-n + k) * (n + s - 1 + k) / ((k + 1) * (e1 + k) * (e2 + k))

        acc = _series_accumulate(n, factor_step, coeff_step)
        pref = mpc(1j) ** n * _mp_poch(e1, n) * _mp_poch(e2, n) / _mp_poch(n + s - 1, n)
        coeffs = _to_real([pref * v for v in acc])
    return _monic(coeffs, VariableKind.X)


def monic_wilson(n: int, p: WilsonParams) -> MonicPoly:
    """Monic Wilson polynomial of degree n in x**2.

    The factor (a+ix)_k (a-ix)_k of the 4F3 series is expanded as a real
    polynomial in x**2.
    """
    _check_degree(n)
    if n == 0:
        return MonicPoly(np.array([1.0]), VariableKind.X_SQUARED)
    _check_denominators([p.a + p.b, p.a + p.c, p.a + p.d], n)
    _check_denominators([n + p.a + p.b + p.c + p.d - 1], n)

    with mp.workdps(_working_dps(n)):
        a, b, c_, d = (mpc(v) for v in p.values)
        e = [a + b, a + c_, a + d]
        sigma = a + b + c_ + d

        def factor_step(factor, k):  # multiply by (a + k)^2 + u, u = x^2
            new = [mpc(0)] * (len(factor) + 1)
            for idx, f in enumerate(factor):
                new[idx] += f * (a + k) ** 2
                new[idx + 1] += f
            return new

        def coeff_step(c, k):
            return c * (-n + k) * (n + sigma - 1 + k) / (
                (k + 1) * (e[0] + k) * (e[1] + k) * (e[2] + k)
            )

        acc = _series_accumulate(n, factor_step, coeff_step)
        pref = (-1) ** n * (
            _mp_poch(e[0], n) * _mp_poch(e[1], n) * _mp_poch(e[2], n)
        ) / _mp_poch(n + sigma - 1, n)
        coeffs = _to_real([pref * v for v in acc])
    return _monic(coeffs, VariableKind.X_SQUARED)


def monic_jacobi(n: int, p: JacobiParams) -> MonicPoly:
    """Monic rescaling of the Jacobi polynomial P_n^(alpha, beta)."""
    _check_degree(n)
    if n == 0:
        return MonicPoly(np.array([1.0]))

    with mp.workdps(_working_dps(n)):
        al, be = mpf(p.alpha), mpf(p.beta)

        def factor_step(factor, k):  # multiply by (1 - x)/2
            new = [mpc(0)] * (len(factor) + 1)
            for idx, f in enumerate(factor):
                new[idx] += f / 2
                new[idx + 1] -= f / 2
            return new

        def coeff_step(c, k):
            return c * (-n + k) * (n + al + be + 1 + k) / ((k + 1) * (al + 1 + k))

        acc = _series_accumulate(n, factor_step, coeff_step)
        lead = _mp_poch(n + al + be + 1, n).real / (2**n * mp.factorial(n))
        if abs(lead) < _DEGENERACY_TOL:
            raise DegenerateParameters("Jacobi leading coefficient vanishes")
        scale = _mp_poch(al + 1, n) / mp.factorial(n)
        coeffs = _to_real([scale * v for v in acc])
    return _monic(coeffs, VariableKind.X)


def eval_poly(poly: MonicPoly, x: complex) -> complex:
    """Horner evaluation; squares the argument first for x**2 polynomials."""
    z = x * x if poly.variable_kind is VariableKind.X_SQUARED else x
    out = 0.0 + 0.0j if isinstance(z, complex) else 0.0
    for c in poly.coeffs[::-1]:
        out = out * z + c
    return out


def poly_derivative(poly: MonicPoly) -> np.ndarray:
    """Ascending coefficients of d/du of the polynomial in its own variable."""
    c = poly.coeffs
    return c[1:] * np.arange(1, c.size)
