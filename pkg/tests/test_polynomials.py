import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orthoflow import (
    ComplexRoots,
    ContinuousHahnParams,
    DegenerateParameters,
    JacobiParams,
    MonicPoly,
    ParameterError,
    VariableKind,
    WilsonParams,
    companion_roots,
    eval_poly,
    monic_continuous_hahn,
    monic_jacobi,
    monic_wilson,
    pochhammer,
)
from orthoflow.polynomials import _check_denominators

from conftest import random_ch_params


def test_pochhammer_empty_product():
    assert pochhammer(3.7 + 2j, 0) == 1


def test_pochhammer_integers():
    assert pochhammer(2, 3) == 24


def test_pochhammer_complex():
    assert pochhammer(1 + 1j, 2) == pytest.approx((1 + 1j) * (2 + 1j))
    assert pochhammer(1 + 1j, 2) == pytest.approx(1 + 3j)


@given(
    st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False),
    st.integers(0, 20),
)
def test_pochhammer_recursion(z, k):
    assert pochhammer(z, k + 1) == pytest.approx(pochhammer(z, k) * (z + k), rel=1e-12)


def test_continuous_hahn_degree_zero():
    poly = monic_continuous_hahn(0, ContinuousHahnParams(2.0, 3.0))
    assert poly.coeffs.tolist() == [1.0]


def test_continuous_hahn_degree_one_is_x():
    poly = monic_continuous_hahn(1, ContinuousHahnParams(1.0, 1.0))
    assert poly.coeffs == pytest.approx([0.0, 1.0], abs=1e-14)


@pytest.mark.parametrize("n", [2, 5, 12, 25, 40])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_continuous_hahn_coefficient_parity(n, seed):
    # symmetric parameters force p(-x) = (-1)^n p(x): coefficients of the
    # opposite parity vanish
    p = random_ch_params(np.random.default_rng(seed))
    poly = monic_continuous_hahn(n, p)
    off_parity = poly.coeffs[(n % 2 != np.arange(n + 1) % 2)]
    scale = np.max(np.abs(poly.coeffs))
    assert np.max(np.abs(off_parity)) < 1e-10 * scale


def test_wilson_degree_zero():
    poly = monic_wilson(0, WilsonParams(1, 1, 1, 1))
    assert poly.variable_kind is VariableKind.X_SQUARED
    assert poly.coeffs.tolist() == [1.0]


def test_wilson_degree_one_half_parameters():
    # direct expansion of the degree-1 series with a=b=c=d=1/2 gives x^2 - 1/4
    poly = monic_wilson(1, WilsonParams(0.5, 0.5, 0.5, 0.5))
    assert poly.coeffs == pytest.approx([-0.25, 1.0], abs=1e-14)


def test_wilson_boundary_d_zero():
    with pytest.raises(ParameterError):
        WilsonParams(1.0, 1.0, 0.5, 0.0)
    poly = monic_wilson(3, WilsonParams(1.0, 1.0, 0.5, 0.0, allow_boundary=True))
    assert poly.degree == 3


def _monic_legendre(n):
    # classical recurrence: p_{k+1} = x p_k - k^2/(4k^2-1) p_{k-1}
    prev = np.array([1.0])
    cur = np.array([0.0, 1.0])
    for k in range(1, n):
        nxt = np.concatenate([[0.0], cur])
        nxt[: prev.size] -= k * k / (4.0 * k * k - 1.0) * prev
        prev, cur = cur, nxt
    return cur if n >= 1 else prev


def test_jacobi_symmetric_degree_one():
    poly = monic_jacobi(1, JacobiParams(2.5, 2.5))
    assert poly.coeffs == pytest.approx([0.0, 1.0], abs=1e-14)


def test_jacobi_degree_one_root():
    poly = monic_jacobi(1, JacobiParams(0.0, 1.0))
    assert -poly.coeffs[0] == pytest.approx(1.0 / 3.0, rel=1e-14)


@pytest.mark.parametrize("n", range(1, 9))
def test_jacobi_legendre_recurrence(n):
    poly = monic_jacobi(n, JacobiParams(0.0, 0.0))
    assert poly.coeffs == pytest.approx(_monic_legendre(n), abs=1e-13)


def test_jacobi_legendre_degree_two():
    poly = monic_jacobi(2, JacobiParams(0.0, 0.0))
    assert poly.coeffs == pytest.approx([-1.0 / 3.0, 0.0, 1.0], abs=1e-14)


@pytest.mark.parametrize("m", range(1, 11))
def test_quadratic_relations_coefficients(m):
    p = ContinuousHahnParams(10.0, 0.3)
    even = monic_continuous_hahn(2 * m, p)
    odd = monic_continuous_hahn(2 * m + 1, p)
    w_even = monic_wilson(m, WilsonParams(p.a, p.b, 0.5, 0.0, allow_boundary=True))
    w_odd = monic_wilson(m, WilsonParams(p.a, p.b, 0.5, 1.0))

    expect = np.zeros(2 * m + 1)
    expect[::2] = w_even.coeffs
    assert np.max(np.abs(even.coeffs - expect) / (1.0 + np.abs(expect))) < 1e-8

    expect = np.zeros(2 * m + 2)
    expect[1::2] = w_odd.coeffs
    assert np.max(np.abs(odd.coeffs - expect) / (1.0 + np.abs(expect))) < 1e-8


def test_eval_poly_constant():
    assert eval_poly(MonicPoly(np.array([1.0])), 5.0) == 1.0


def test_eval_poly_square_kind():
    poly = MonicPoly(np.array([-1.0 / 3.0, 1.0]), VariableKind.X_SQUARED)
    assert eval_poly(poly, 1.0) == pytest.approx(2.0 / 3.0)


def test_eval_poly_at_companion_roots():
    p = random_ch_params(np.random.default_rng(7))
    poly = monic_continuous_hahn(12, p)
    roots = companion_roots(poly)
    scale = np.max(np.abs(poly.coeffs)) * np.max(1.0 + np.abs(roots)) ** 12
    for r in roots:
        assert abs(eval_poly(poly, r)) <= 1e-8 * scale


def test_degenerate_denominator_detection():
    with pytest.raises(DegenerateParameters):
        _check_denominators([-2.0], 5)


def test_degree_cap():
    with pytest.raises(ValueError):
        monic_continuous_hahn(65, ContinuousHahnParams(1.0, 1.0))


def test_monic_poly_validates_leading_coefficient():
    with pytest.raises(ValueError):
        MonicPoly(np.array([1.0, 2.0]))


def test_companion_rejects_complex_roots():
    with pytest.raises(ComplexRoots):
        companion_roots(MonicPoly(np.array([1.0, 0.0, 1.0])))  # x^2 + 1
