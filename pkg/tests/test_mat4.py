import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.linalg import expm

from hyperlie import mat4
from hyperlie.families import FamilyElement, FamilyId, generator

entries = st.floats(-2, 2, allow_nan=False, allow_infinity=False)
mats = arrays(np.float64, (4, 4), elements=entries)


def naive_product(A, B):
    out = [[0.0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            for k in range(4):
                out[i][j] += A[i][k] * B[k][j]
    return np.array(out)


def charpoly_by_interpolation(A):
    """det(x E - A) at x = -2..2 (exact), then Lagrange interpolation."""
    M = sympy.Matrix(A.astype(int).tolist())
    x = sympy.symbols("x")
    pts = [(k, (k * sympy.eye(4) - M).det()) for k in range(-2, 3)]
    poly = sympy.Poly(sympy.interpolate(pts, x), x)
    return [float(poly.coeff_monomial(x**k)) for k in range(5)]


def test_mat_mul_identity_and_zero(rng):
    A = rng.normal(size=(4, 4))
    assert np.array_equal(mat4.mat_mul(np.eye(4), A), A)
    assert np.array_equal(mat4.mat_mul(A, np.zeros((4, 4))), np.zeros((4, 4)))


def test_mat_mul_matches_triple_loop(rng):
    for _ in range(20):
        A = rng.integers(-9, 10, (4, 4))
        B = rng.integers(-9, 10, (4, 4))
        assert np.array_equal(mat4.mat_mul(A, B), naive_product(A, B))


def test_rejects_non_finite():
    A = np.eye(4)
    A[1, 2] = np.nan
    with pytest.raises(ValueError):
        mat4.as_mat4(A)
    with pytest.raises(ValueError):
        mat4.as_mat4(np.eye(3))


def test_char_poly_hc2():
    for b, c, d in [(1, 2, 3), (0.5, -1.5, 0.25), (0, 0, 2)]:
        A = generator(FamilyElement(FamilyId.HC2, (0, b, c, d)))
        got = mat4.char_poly(A).as_array()
        assert np.allclose(got, [0, 0, b * b + c * c + d * d, 0, 1], atol=1e-12, rtol=0)


def test_char_poly_zero():
    assert mat4.char_poly(np.zeros((4, 4))).coeffs == (0.0, 0.0, 0.0, 0.0, 1.0)


def test_char_poly_matches_interpolated_determinant(rng):
    for _ in range(10):
        A = rng.integers(-5, 6, (4, 4))
        assert np.allclose(mat4.char_poly(A).as_array(), charpoly_by_interpolation(A), atol=1e-9)


def test_char_poly_similarity_invariant(rng):
    for _ in range(10):
        A = rng.integers(-3, 4, (4, 4)).astype(float)
        while True:
            P = rng.integers(-3, 4, (4, 4)).astype(float)
            if abs(np.linalg.det(P)) > 0.5:
                break
        B = np.linalg.inv(P) @ A @ P
        p = mat4.char_poly(B)
        assert p.coeffs[4] == 1.0
        assert np.allclose(p.as_array(), mat4.char_poly(A).as_array(), atol=1e-9, rtol=1e-9)


def test_poly_call():
    p = mat4.Poly4((1.0, 2.0, 0.0, 0.0, 1.0))
    assert p(2.0) == 1 + 4 + 16


def test_exp_series_zero_and_nilpotent():
    assert np.array_equal(mat4.exp_series(np.zeros((4, 4))), np.eye(4))
    N = np.zeros((4, 4))
    N[0, 3] = 2.5
    N[1, 3] = -1.0
    assert np.array_equal(mat4.exp_series(N), np.eye(4) + N)


def test_exp_series_half_turn():
    A = generator(FamilyElement(FamilyId.HC2, (0, math.pi, 0, 0)))
    # rotation by pi in the e3 e4 plane
    rodrigues = np.eye(4) + math.sin(math.pi) / math.pi * A + (1 - math.cos(math.pi)) / math.pi**2 * A @ A
    assert np.allclose(rodrigues, np.diag([1, 1, -1, -1]), atol=1e-15)
    assert mat4.approx_eq(mat4.exp_series(A), np.diag([1.0, 1, -1, -1]), 1e-14)


def test_exp_series_matches_scipy(rng):
    for scale in (0.1, 1.0, 5.0, 30.0):
        A = scale * rng.normal(size=(4, 4))
        ref = expm(A)
        assert np.max(np.abs(mat4.exp_series(A) - ref)) <= 1e-12 * max(1.0, np.max(np.abs(ref)))


def test_exp_series_rejects_bad_tol():
    with pytest.raises(ValueError):
        mat4.exp_series(np.eye(4), 0.0)


def test_exp_series_non_convergence(monkeypatch):
    monkeypatch.setattr(mat4, "MAX_TERMS", 2)
    with pytest.raises(mat4.ConvergenceError):
        mat4.exp_series(0.4 * np.ones((4, 4)) / 4, 1e-16)


def test_approx_eq():
    A = np.arange(16.0).reshape(4, 4)
    assert mat4.approx_eq(A, A, 1e-300)
    assert not mat4.approx_eq(np.eye(4), np.zeros((4, 4)), 0.5)
    with pytest.raises(ValueError):
        mat4.approx_eq(A, A, -1.0)


def test_nilpotency_index():
    N = np.diag([1.0, 1.0, 1.0], k=1)
    assert mat4.nilpotency_index(N) == 4
    assert mat4.nilpotency_index(np.zeros((4, 4))) == 1
    assert mat4.nilpotency_index(np.eye(4)) is None


@settings(max_examples=60, deadline=None)
@given(mats)
def test_exp_inverse(A):
    assert mat4.approx_eq(mat4.exp_series(A) @ mat4.exp_series(-A), np.eye(4), 1e-10)


@settings(max_examples=60, deadline=None)
@given(mats, st.floats(-1, 1), st.floats(-1, 1))
def test_one_parameter_subgroup(A, s, t):
    lhs = mat4.exp_series((s + t) * A)
    rhs = mat4.exp_series(s * A) @ mat4.exp_series(t * A)
    assert mat4.approx_eq(lhs, rhs, 1e-10)


@settings(max_examples=60, deadline=None)
@given(mats)
def test_det_exp_is_exp_trace(A):
    det = np.linalg.det(mat4.exp_series(A))
    ref = math.exp(np.trace(A))
    assert abs(det - ref) <= 1e-9 * ref
