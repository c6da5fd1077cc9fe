import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
import mpmath

from hyperphasor.algebra import (
    CausalClass,
    SplitComplex,
    algebra_norm,
    classify_vector,
    sc_banach_norm,
    sc_conj,
    sc_exp,
    sc_inverse,
    sc_minkowski_modulus,
    sc_mul,
    series_cosh,
    series_exp,
    series_sinh,
)
from hyperphasor.errors import DomainError, LightlikeNotInvertible, NoConvergence, Overflow

finite = st.floats(min_value=-1e3, max_value=1e3).filter(lambda x: x == 0 or abs(x) > 1e-50)
split = st.builds(SplitComplex, finite, finite)
exact = st.integers(-2**20, 2**20).map(lambda n: n / 1024)


def expm(x):
    # Independent high-precision oracle for the matrix exponential.
    with mpmath.workdps(40):
        return np.array(mpmath.expm(mpmath.matrix(x.tolist())).tolist(), dtype=float)


def as_matrix(w):
    # x + jy acts on the plane as [[x, y], [y, x]]; an independent model of the product.
    return np.array([[w.re, w.im], [w.im, w.re]])


def close(x, y, tol):
    return algebra_norm(x - y) <= tol * max(1.0, algebra_norm(y))


# -- products and conjugation -------------------------------------------------


def test_mul_zero_divisor():
    assert sc_mul(SplitComplex(1, 1), SplitComplex(1, -1)) == SplitComplex(0, 0)


def test_mul_expansion():
    # (2 + j)(3 + 2j) = 6 + 4j + 3j + 2j^2 = 8 + 7j
    assert sc_mul(SplitComplex(2, 1), SplitComplex(3, 2)) == SplitComplex(8, 7)


@given(exact, exact)
def test_mul_identity_exact(x, y):
    w = SplitComplex(x, y)
    assert sc_mul(w, SplitComplex(1, 0)) == w


@given(split)
def test_mul_identity(w):
    prod = sc_mul(w, SplitComplex(1, 0))
    # Products are formed from the rounded light-cone coordinates re +- im.
    assert abs(prod.re - w.re) <= 2.3e-16 * (abs(w.re) + abs(w.im))
    assert abs(prod.im - w.im) <= 2.3e-16 * (abs(w.re) + abs(w.im))


@given(split, split)
def test_mul_matches_matrix_model(u, v):
    prod = sc_mul(u, v)
    expected = as_matrix(u) @ as_matrix(v)
    assert prod.re == pytest.approx(expected[0, 0], rel=1e-12, abs=1e-9)
    assert prod.im == pytest.approx(expected[0, 1], rel=1e-12, abs=1e-9)


@given(split, split)
def test_mul_commutative(u, v):
    assert sc_mul(u, v) == sc_mul(v, u)


@given(split, split, split)
def test_mul_associative(u, v, w):
    lhs = sc_mul(sc_mul(u, v), w)
    rhs = sc_mul(u, sc_mul(v, w))
    scale = sc_banach_norm(u) * sc_banach_norm(v) * sc_banach_norm(w)
    assert abs(lhs.re - rhs.re) <= 1e-12 * scale + 1e-300
    assert abs(lhs.im - rhs.im) <= 1e-12 * scale + 1e-300


@pytest.mark.parametrize("w, expected", [
    (SplitComplex(3, 2), SplitComplex(3, -2)),
    (SplitComplex(5, 0), SplitComplex(5, 0)),
])
def test_conj(w, expected):
    assert sc_conj(w) == expected


@given(split)
def test_conj_involution(w):
    assert sc_conj(sc_conj(w)) == w
    assert sc_conj(w).re == w.re and sc_conj(w).im == -w.im


def test_fields_are_finite():
    with pytest.raises(DomainError):
        SplitComplex(math.nan, 0)
    with pytest.raises(Overflow):
        SplitComplex(math.inf, 0)


# -- modulus and norm ---------------------------------------------------------


@pytest.mark.parametrize("w, expected", [
    (SplitComplex(3, 0), 3.0),
    (SplitComplex(1, 1), 0.0),
    (SplitComplex(8, 7), 3.872983346207417),
])
def test_minkowski_modulus(w, expected):
    assert sc_minkowski_modulus(w) == pytest.approx(expected, rel=1e-15)


def test_modulus_of_product_example():
    assert sc_minkowski_modulus(SplitComplex(8, 7)) == pytest.approx(
        sc_minkowski_modulus(SplitComplex(2, 1)) * sc_minkowski_modulus(SplitComplex(3, 2)), rel=1e-15
    )


@pytest.mark.parametrize("w, expected", [
    (SplitComplex(1, 0), math.sqrt(2)),
    (SplitComplex(0, 0), 0.0),
    (SplitComplex(3, 4), 7.0710678118654755),
])
def test_banach_norm(w, expected):
    assert sc_banach_norm(w) == pytest.approx(expected, rel=1e-15)


@given(split, split)
def test_modulus_multiplicative(u, v):
    lhs = sc_minkowski_modulus(sc_mul(u, v))
    rhs = sc_minkowski_modulus(u) * sc_minkowski_modulus(v)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


@given(split, split)
def test_banach_submultiplicative(u, v):
    assert sc_banach_norm(sc_mul(u, v)) <= sc_banach_norm(u) * sc_banach_norm(v) * (1 + 1e-12)


# -- inverse ------------------------------------------------------------------


def test_inverse_examples():
    assert sc_inverse(SplitComplex(2, 0)) == SplitComplex(0.5, 0)
    assert sc_inverse(SplitComplex(5, 3)) == SplitComplex(0.3125, -0.1875)
    with pytest.raises(LightlikeNotInvertible):
        sc_inverse(SplitComplex(1, 1))


def test_inverse_of_timelike_unit():
    # j * j = 1, so j is its own inverse
    assert sc_inverse(SplitComplex(0, 1)) == SplitComplex(0, 1)


@given(split)
def test_inverse_round_trip(w):
    if sc_minkowski_modulus(w) == 0:
        with pytest.raises(LightlikeNotInvertible):
            sc_inverse(w)
        return
    prod = sc_mul(w, sc_inverse(w))
    assert abs(prod.re - 1) <= 1e-12
    assert abs(prod.im) <= 1e-12


# -- exponential --------------------------------------------------------------


def test_exp_examples():
    assert sc_exp(SplitComplex(0, 0)) == SplitComplex(1, 0)
    w = sc_exp(SplitComplex(0, math.log(2)))
    assert w.re == pytest.approx(1.25, rel=1e-15)
    assert w.im == pytest.approx(0.75, rel=1e-15)
    assert sc_exp(SplitComplex(1, 0)).re == pytest.approx(math.e, rel=1e-15)


@given(st.floats(min_value=-700, max_value=700))
def test_exp_of_pure_j_is_unimodular(x):
    assert sc_minkowski_modulus(sc_exp(SplitComplex(0, x))) == pytest.approx(1.0, abs=1e-12)


@given(st.floats(-5, 5), st.floats(-5, 5))
def test_exp_matches_matrix_exponential(x, y):
    w = sc_exp(SplitComplex(x, y))
    expected = expm(as_matrix(SplitComplex(x, y)))
    assert w.re == pytest.approx(expected[0, 0], rel=1e-12)
    assert w.im == pytest.approx(expected[0, 1], rel=1e-12, abs=1e-12)


def test_exp_overflow():
    with pytest.raises(Overflow):
        sc_exp(SplitComplex(800, 0))


# -- classification -----------------------------------------------------------


@pytest.mark.parametrize("a, b, expected", [
    (5, 3, CausalClass.SPACELIKE),
    (3, 5, CausalClass.TIMELIKE),
    (2, -2, CausalClass.LIGHTLIKE),
])
def test_classify_vector(a, b, expected):
    assert classify_vector(a, b) is expected


@given(finite, finite)
def test_classify_depends_on_squares_only(a, b):
    c = classify_vector(a, b)
    assert classify_vector(-a, -b) is c
    assert classify_vector(a, -b) is c


# -- series -------------------------------------------------------------------

NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])


@pytest.mark.parametrize("zero, identity", [
    (0.0, 1.0),
    (0j, 1 + 0j),
    (SplitComplex(0, 0), SplitComplex(1, 0)),
    (np.zeros((3, 3)), np.eye(3)),
])
def test_series_at_zero(zero, identity):
    assert close(series_exp(zero), identity, 0)
    assert close(series_cosh(zero), identity, 0)
    assert algebra_norm(series_sinh(zero)) == 0


def test_series_nilpotent():
    np.testing.assert_array_equal(series_exp(NILPOTENT), np.eye(2) + NILPOTENT)
    np.testing.assert_array_equal(series_cosh(NILPOTENT), np.eye(2))
    np.testing.assert_array_equal(series_sinh(NILPOTENT), NILPOTENT)


def test_series_split_complex_exp_of_jx():
    x = 0.7
    got = series_exp(SplitComplex(0, x), 1e-16)
    assert got.re == pytest.approx(math.cosh(x), rel=1e-14)
    assert got.im == pytest.approx(math.sinh(x), rel=1e-14)


def test_series_cosh_sinh_of_imaginary_argument():
    assert series_cosh(1.3j) == pytest.approx(0.26749882862458736, abs=1e-14)
    assert series_sinh(1.3j) == pytest.approx(0.963558185417193j, abs=1e-14)


def test_series_rejects_bad_input():
    with pytest.raises(DomainError):
        series_exp(1.0, tol=0)
    with pytest.raises(DomainError):
        series_exp(np.ones((5, 5)))
    with pytest.raises(DomainError):
        series_exp(np.ones((2, 3)))
    with pytest.raises(TypeError):
        series_exp("x")


def test_series_term_cap():
    # 300**k / k! peaks near k = 300 so 200 terms cannot converge.
    with pytest.raises((NoConvergence, Overflow)):
        series_exp(300.0)


def test_series_half_sum_identity():
    x = np.array([[0.3, -1.2], [0.8, 0.1]])
    half_sum = 0.5 * (series_exp(x) + series_exp(-x))
    np.testing.assert_allclose(series_cosh(x), half_sum, rtol=1e-13, atol=1e-14)
    np.testing.assert_allclose(series_sinh(x), series_exp(x) - half_sum, rtol=1e-13, atol=1e-14)


scalars = st.floats(-3.5, 3.5)


@st.composite
def elements(draw):
    kind = draw(st.sampled_from(["real", "complex", "split", "matrix"]))
    if kind == "real":
        return draw(scalars)
    if kind == "complex":
        return complex(draw(scalars), draw(scalars))
    if kind == "split":
        return SplitComplex(draw(scalars), draw(scalars))
    n = draw(st.integers(2, 4))
    flat = draw(st.lists(st.floats(-1, 1), min_size=n * n, max_size=n * n))
    return np.array(flat).reshape(n, n)


@settings(max_examples=200)
@given(elements())
def test_exp_splits_into_cosh_plus_sinh(x):
    tol = 1e-12
    ch, sh, ex = series_cosh(x, tol), series_sinh(x, tol), series_exp(x, tol)
    # Each series is truncated relative to its own size, so compare on the largest scale.
    scale = max(1.0, algebra_norm(ch), algebra_norm(sh), algebra_norm(ex))
    assert algebra_norm(ch + sh - ex) <= 10 * tol * scale


@settings(max_examples=100)
@given(st.integers(2, 4), st.lists(st.floats(-1.2, 1.2), min_size=16, max_size=16))
def test_matrix_series_matches_expm(n, flat):
    x = np.array(flat[: n * n]).reshape(n, n)
    np.testing.assert_allclose(series_exp(x), expm(x), rtol=1e-12, atol=1e-12)
