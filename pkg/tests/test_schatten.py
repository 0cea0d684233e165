"""Schatten norms and the averaging bound on weighted kernels.

The averaging bound is exact on atomic measure spaces, so the random suites
assert it at near machine precision rather than with a modelling tolerance.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from hywbench import (
    NumericalError,
    WeightedKernel,
    adjoint_kernel,
    conjugate_exponent,
    cross_norm_qpq,
    russo_gap,
    schatten_norm,
    weighted_operator_matrix,
)

complex_mats = hnp.arrays(
    np.complex128,
    st.tuples(st.integers(2, 6), st.integers(2, 6)),
    elements=st.complex_numbers(max_magnitude=10.0, allow_nan=False, allow_infinity=False),
)


def random_kernel(rng, nx=None, ng=None):
    nx = nx or int(rng.integers(2, 9))
    ng = ng or int(rng.integers(2, 9))
    vals = rng.standard_normal((nx, ng)) + 1j * rng.standard_normal((nx, ng))
    wx = rng.uniform(0.1, 2.0, nx)
    wg = rng.uniform(0.1, 2.0, ng)
    return WeightedKernel(vals, wx, wg)


def test_conjugate_exponent_values():
    assert conjugate_exponent(2.0) == 2.0
    assert conjugate_exponent(4 / 3) == pytest.approx(4.0, rel=1e-14)
    assert conjugate_exponent(1.5) == pytest.approx(3.0, rel=1e-14)
    assert conjugate_exponent(1.0) == np.inf
    with pytest.raises(ValueError):
        conjugate_exponent(0.7)


def test_schatten_diag_frozen_value():
    a = np.diag([1.0, 2.0, 2.0])
    assert schatten_norm(a, 3.0) == pytest.approx(17.0 ** (1 / 3), rel=1e-13)
    assert 17.0 ** (1 / 3) == pytest.approx(2.5712815906582355, rel=1e-15)
    assert schatten_norm(a, np.inf) == 2.0
    assert schatten_norm(a, 1.0) == 5.0


def test_schatten_two_equals_frobenius():
    rng = np.random.default_rng(1)
    a = rng.standard_normal((5, 7)) + 1j * rng.standard_normal((5, 7))
    naive = np.sqrt((np.abs(a) ** 2).sum())
    assert schatten_norm(a, 2.0) == pytest.approx(naive, rel=1e-13)


@given(complex_mats)
@settings(max_examples=100)
def test_schatten_monotone_in_p(a):
    # larger exponent, smaller norm
    n1 = schatten_norm(a, 1.0)
    n2 = schatten_norm(a, 2.0)
    ninf = schatten_norm(a, np.inf)
    assert n1 + 1e-9 >= n2 >= ninf - 1e-9


@given(complex_mats, complex_mats)
@settings(max_examples=100)
def test_schatten_triangle(a, b):
    if a.shape != b.shape:
        b = np.zeros_like(a)
    for p in (1.0, 1.5, 2.0, 3.0):
        lhs = schatten_norm(a + b, p)
        rhs = schatten_norm(a, p) + schatten_norm(b, p)
        assert lhs <= rhs + 1e-8 * max(1.0, rhs)


def test_schatten_unitary_invariance():
    rng = np.random.default_rng(2)
    a = rng.standard_normal((6, 6))
    q, _ = np.linalg.qr(rng.standard_normal((6, 6)))
    for p in (1.0, 1.7, 2.0, 4.0, np.inf):
        assert schatten_norm(q @ a, p) == pytest.approx(schatten_norm(a, p), rel=1e-10)
        assert schatten_norm(a @ q, p) == pytest.approx(schatten_norm(a, p), rel=1e-10)


def test_schatten_rejects_bad_input():
    with pytest.raises(ValueError):
        schatten_norm(np.zeros(3), 2.0)
    with pytest.raises(ValueError):
        schatten_norm(np.zeros((2, 2)), 0.5)
    with pytest.raises(NumericalError):
        schatten_norm(np.array([[np.nan, 0.0], [0.0, 1.0]]), 2.0)


def test_kernel_validation():
    with pytest.raises(ValueError):
        WeightedKernel(np.zeros((3, 3)), np.ones(2), np.ones(3))
    with pytest.raises(ValueError):
        WeightedKernel(np.zeros((3, 3)), -np.ones(3), np.ones(3))
    with pytest.raises(ValueError):
        WeightedKernel(np.zeros(3), np.ones(3), np.ones(3))
    with pytest.raises(NotImplementedError):
        WeightedKernel(np.zeros((2, 2, 2)), np.ones(2), np.ones(2))


def test_adjoint_is_an_involution():
    rng = np.random.default_rng(3)
    k = random_kernel(rng)
    kk = adjoint_kernel(adjoint_kernel(k))
    np.testing.assert_array_equal(kk.values, k.values)
    np.testing.assert_array_equal(kk.xi_weights, k.xi_weights)
    m = weighted_operator_matrix(k)
    mstar = weighted_operator_matrix(adjoint_kernel(k))
    np.testing.assert_allclose(mstar, m.conj().T, atol=1e-15)


def test_cross_norm_against_naive_loop():
    rng = np.random.default_rng(4)
    k = random_kernel(rng, nx=5, ng=7)
    p = 1.4
    q = conjugate_exponent(p)
    acc = 0.0
    for j in range(7):
        inner = sum(abs(k.values[i, j]) ** p * k.xi_weights[i] for i in range(5))
        acc += inner ** (q / p) * k.gamma_weights[j]
    assert cross_norm_qpq(k, q, p) == pytest.approx(acc ** (1 / q), rel=1e-12)


def test_cross_norm_validates_exponents():
    rng = np.random.default_rng(5)
    k = random_kernel(rng)
    with pytest.raises(ValueError):
        cross_norm_qpq(k, 3.0, 2.5)  # inner exponent out of range
    with pytest.raises(ValueError):
        cross_norm_qpq(k, 4.0, 1.5)  # not a conjugate pair


def test_averaging_bound_is_equality_at_two():
    # at p = q = 2 both sides reduce to the weighted Frobenius norm
    rng = np.random.default_rng(6)
    for _ in range(20):
        k = random_kernel(rng)
        lhs, rhs = russo_gap(k, 2.0, 2.0)
        assert lhs == pytest.approx(rhs, rel=1e-12)


def test_averaging_bound_random_suite():
    rng = np.random.default_rng(7)
    for _ in range(300):
        k = random_kernel(rng)
        p = rng.uniform(1.05, 2.0)
        lhs, rhs = russo_gap(k, conjugate_exponent(p), p)
        assert lhs <= rhs * (1 + 1e-10)


def test_averaging_bound_diagonal_is_tight():
    k = WeightedKernel(np.diag([1.0, 2.0, 2.0]), np.ones(3), np.ones(3))
    lhs, rhs = russo_gap(k, 3.0, 1.5)
    assert lhs == pytest.approx(17.0 ** (1 / 3), rel=1e-13)
    assert rhs == pytest.approx(lhs, rel=1e-12)


def test_weighted_operator_matrix_is_similarity():
    # weights fold into the matrix as sqrt factors on both sides
    vals = np.array([[1.0, 2.0], [3.0, 4.0]])
    k = WeightedKernel(vals, np.array([4.0, 1.0]), np.array([1.0, 9.0]))
    expected = np.array([[2.0, 12.0], [3.0, 12.0]])
    np.testing.assert_allclose(weighted_operator_matrix(k), expected)
