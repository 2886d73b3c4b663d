"""Independent verification of computed roots.

Companion-matrix eigenvalues, Bethe-type product identities and the
second-order difference equation at the nodes all check the flow output
without touching the flow code path. The difference-equation residual
evaluates the polynomial in factored form (products over the supplied
roots); Horner on the expanded coefficients loses several digits at
degree ~30 and large |x|.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import ComplexRoots, SingularFactor
from .flow import FlowSettings, PotentialKind, solve_roots
from .params import ContinuousHahnParams, Family, WilsonParams
from .polynomials import MonicPoly, VariableKind, monic_continuous_hahn, monic_wilson
from .potentials import FlowFamily, hessian

_IMAG_ROOT_TOL = 1e-6
_SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class VerificationReport:
    max_bethe_residual: float
    max_diff_eq_residual: float
    root_mismatch: float
    hessian_min_eigenvalue: float

    def __post_init__(self):
        vals = (
            self.max_bethe_residual,
            self.max_diff_eq_residual,
            self.root_mismatch,
        )
        if not all(np.isfinite(v) and v >= 0 for v in vals):
            raise ValueError("residual entries must be finite and nonnegative")
        if not np.isfinite(self.hessian_min_eigenvalue):
            raise ValueError("hessian_min_eigenvalue must be finite")


def _newton_refine(coeffs: np.ndarray, z0: float) -> float:
    """Polish a simple real root of sum(coeffs[k] z^k) in extended precision.

    At degree ~25 the eigenvalue solver returns roots good to ~1e-6 only;
    a few Newton steps free of evaluation roundoff recover the root of the
    stored coefficients to full double precision.
    """
    cs = [mp.mpf(c) for c in coeffs]
    with mp.workdps(50):
        z = mp.mpf(z0)
        for _ in range(50):
            pv = mp.mpf(0)
            dv = mp.mpf(0)
            for c in reversed(cs):
                dv = dv * z + pv
                pv = pv * z + c
            if dv == 0:
                break
            step = pv / dv
            z -= step
            if abs(step) < mp.mpf("1e-40") * (1 + abs(z)):
                break
        return float(z)


def companion_roots(poly: MonicPoly) -> np.ndarray:
    """All roots via balanced QR iteration on the companion matrix, sorted,
    then Newton-polished in extended precision.

    For polynomials in x**2 the roots in x**2 must all be positive; the
    positive square roots are returned.
    """
    if poly.degree < 1:
        raise ValueError("degree must be at least 1")
    raw = np.roots(poly.coeffs[::-1])
    scale = 1.0 + np.abs(raw.real)
    if np.any(np.abs(raw.imag) > _IMAG_ROOT_TOL * scale):
        raise ComplexRoots("companion roots have non-negligible imaginary parts")
    roots = np.sort([_newton_refine(poly.coeffs, r) for r in raw.real])
    if poly.variable_kind is VariableKind.X_SQUARED:
        if np.any(roots <= 0):
            raise ComplexRoots("x^2-roots must be positive inside the orthogonality regime")
        roots = np.sqrt(roots)
    return roots


def min_eigenvalue_symmetric(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 60) -> float:
    """Smallest eigenvalue of a symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return float(a[0, 0])
    norm = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2))
        if off <= tol * max(norm, 1.0):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
    return float(np.min(np.diag(a)))


def _checked_ratio(num: complex, den: complex) -> complex:
    if abs(den) < _SINGULAR_TOL:
        raise SingularFactor(f"denominator factor {den} below {_SINGULAR_TOL}")
    return num / den


def bethe_residual_ch(x, p: ContinuousHahnParams) -> float:
    """Max deviation of the continuous Hahn product identity from (-1)^(n+1)."""
    x = np.asarray(x, dtype=float)
    n = x.size
    target = (-1.0) ** (n + 1)
    worst = 0.0
    for j in range(n):
        xj = x[j]
        lhs = _checked_ratio(1j * p.a + xj, 1j * p.a - xj)
        lhs *= _checked_ratio(1j * p.b + xj, 1j * p.b - xj)
        for k in range(n):
            if k != j:
                lhs *= _checked_ratio(1j + xj - x[k], 1j - xj + x[k])
        worst = max(worst, abs(lhs - target))
    return worst


def bethe_residual_w(x, p: WilsonParams) -> float:
    """Max deviation of the Wilson product identity from 1."""
    x = np.asarray(x, dtype=float)
    n = x.size
    worst = 0.0
    for j in range(n):
        xj = x[j]
        lhs = 1.0 + 0.0j
        for e in p.values:
            lhs *= _checked_ratio(1j * e + xj, 1j * e - xj)
        for k in range(n):
            if k != j:
                lhs *= _checked_ratio(1j + xj + x[k], 1j - xj - x[k])
                lhs *= _checked_ratio(1j + xj - x[k], 1j - xj + x[k])
        worst = max(worst, abs(lhs - 1.0))
    return worst


def _factored_eval(roots: np.ndarray, z: complex, squared: bool) -> complex:
    if squared:
        return complex(np.prod(z * z - roots * roots))
    return complex(np.prod(z - roots))


def diff_eq_residual(poly: MonicPoly, roots, family: Family, params) -> float:
    """Normalized residual of the difference equation at the nodes.

    Max over j of |A(x_j) p(x_j + i) + A(-x_j) p(x_j - i)| divided by
    |lambda_n| |p'(x_j)|; p is evaluated through its factored form.
    """
    roots = np.asarray(roots, dtype=float)
    n = poly.degree
    if roots.size != n:
        raise ValueError("number of roots must match the polynomial degree")

    if family is Family.CH:
        a, b = params.a, params.b
        lam = -n * (n + 2 * a + 2 * b - 1)

        def coeff_a(z):
            return (z + 1j * a) * (z + 1j * b)

        squared = False
    elif family is Family.WILSON:
        a, b, c, d = params.values
        lam = -n * (n + a + b + c + d - 1)

        def coeff_a(z):
            if abs(z) < _SINGULAR_TOL:
                raise SingularFactor("Wilson A(x) is singular at x = 0")
            return (z + 1j * a) * (z + 1j * b) * (z + 1j * c) * (z + 1j * d) / (
                2.0 * z * (2.0 * z + 1j)
            )

        squared = True
    else:
        raise ValueError(f"unsupported family {family}")

    worst = 0.0
    for j in range(n):
        xj = roots[j]
        others = np.delete(roots, j)
        if squared:
            dp = 2.0 * xj * np.prod(xj * xj - others * others)
        else:
            dp = np.prod(xj - others)
        lhs = coeff_a(xj) * _factored_eval(roots, xj + 1j, squared)
        lhs += coeff_a(-xj) * _factored_eval(roots, xj - 1j, squared)
        scale = abs(lam) * abs(dp)
        if scale < _SINGULAR_TOL:
            raise SingularFactor("degenerate normalization scale (repeated roots?)")
        worst = max(worst, abs(lhs) / scale)
    return worst


def full_verify(family: Family, params, n: int) -> VerificationReport:
    """Run the flow, polish, and cross-check against every oracle."""
    if family is Family.CH:
        kind = PotentialKind(FlowFamily.CONTINUOUS_HAHN, params)
        poly = monic_continuous_hahn(n, params)
    elif family is Family.WILSON:
        kind = PotentialKind(FlowFamily.WILSON, params)
        poly = monic_wilson(n, params)
    else:
        raise ValueError(f"full_verify supports CH and WILSON, got {family}")

    settings = FlowSettings(step=0.1, t_max=10.0, grad_tol=1e-10, record_every=5)
    _, eq = solve_roots(kind, n, settings=settings, newton_tol=1e-12)
    flow_roots = np.sort(eq)
    comp = companion_roots(poly)
    mismatch = float(np.max(np.abs(flow_roots - comp)))

    if family is Family.CH:
        bethe = bethe_residual_ch(flow_roots, params)
    else:
        bethe = bethe_residual_w(flow_roots, params)
    diff_res = diff_eq_residual(poly, flow_roots, family, params)
    min_eig = min_eigenvalue_symmetric(hessian(kind, eq))
    return VerificationReport(bethe, diff_res, mismatch, min_eig)
