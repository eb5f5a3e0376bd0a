import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grunsky_hankel.errors import InsufficientOrder, NonUnitConstantTerm, NotNormalized
from grunsky_hankel.series import (
    BivariateSeries,
    TruncatedSeries,
    bivariate_exp,
    bivariate_log,
    bivariate_mul,
    divided_difference_kernel,
    series_exp,
    series_log,
    series_mul,
    series_pow,
)


def naive_product(a, b, n):
    out = np.zeros(n + 1, dtype=complex)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            out[i + j] += a[i] * b[j]
    return out


def test_mul_difference_of_squares():
    u = TruncatedSeries([1, 1, 0])
    v = TruncatedSeries([1, -1, 0])
    np.testing.assert_array_equal(series_mul(u, v).coeffs, [1, 0, -1])


def test_mul_identity_element():
    u = TruncatedSeries([0.5, 2 - 1j, 3, 4j])
    np.testing.assert_array_equal((TruncatedSeries.one(3) * u).coeffs, u.coeffs)


def test_mul_hand_expansion():
    u = TruncatedSeries([0, 1, 2, 0, 0])
    np.testing.assert_array_equal(series_mul(u, u).coeffs, [0, 0, 1, 4, 4])


def test_mul_order_is_min():
    assert series_mul(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 1, 1, 1, 1])).order == 2


def test_log_mercator():
    L = series_log(TruncatedSeries([1, -1, 0, 0]))
    np.testing.assert_allclose(L.coeffs, [0, -1, -1 / 2, -1 / 3], atol=1e-15)


def test_log_of_one():
    np.testing.assert_array_equal(series_log(TruncatedSeries.one(5)).coeffs, np.zeros(6))


def test_log_of_product():
    u = series_mul(TruncatedSeries([1, 1, 0, 0, 0]), TruncatedSeries([1, -1, 0, 0, 0]))
    np.testing.assert_allclose(series_log(u).coeffs, [0, 0, -1, 0, -0.5], atol=1e-15)


def test_log_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_log(TruncatedSeries([2, 1]))
    with pytest.raises(NonUnitConstantTerm):
        series_pow(TruncatedSeries([1 + 1e-9, 1]), 0.5)


def test_pow_binomial_koebe():
    np.testing.assert_allclose(series_pow(TruncatedSeries([1, -1, 0, 0]), -2).coeffs, [1, 2, 3, 4], atol=1e-14)


def test_pow_zero():
    np.testing.assert_array_equal(series_pow(TruncatedSeries([1, 3, 4]), 0).coeffs, [1, 0, 0])


def test_pow_two_thirds():
    c = np.zeros(8)
    c[0], c[3] = 1, -1
    got = series_pow(TruncatedSeries(c), -2 / 3).coeffs
    want = np.zeros(8)
    want[0], want[3], want[6] = 1, 2 / 3, 5 / 9
    np.testing.assert_allclose(got, want, atol=1e-14)


unit_series = st.lists(
    st.tuples(st.floats(-1.5, 1.5), st.floats(-1.5, 1.5)), min_size=1, max_size=16
).map(lambda xs: TruncatedSeries([1.0] + [complex(a, b) for a, b in xs]))


@settings(max_examples=60, deadline=None)
@given(unit_series)
def test_exp_log_roundtrip(u):
    back = series_exp(series_log(u))
    assert np.max(np.abs(back.coeffs - u.coeffs)) < 1e-10 * max(1.0, np.max(np.abs(u.coeffs)) ** u.order)


@settings(max_examples=60, deadline=None)
@given(unit_series)
def test_sqrt_squares_back(u):
    r = series_pow(u, 0.5)
    assert np.max(np.abs(series_mul(r, r).coeffs - u.coeffs)) < 1e-10 * max(1.0, np.max(np.abs(u.coeffs)) ** u.order)


@settings(max_examples=40, deadline=None)
@given(unit_series, unit_series)
def test_mul_matches_naive(u, v):
    n = min(u.order, v.order)
    np.testing.assert_allclose(series_mul(u, v).coeffs, naive_product(u.coeffs, v.coeffs, n), atol=1e-12)


def test_roundtrip_seeded_order_16():
    rng = np.random.default_rng(5)
    for _ in range(50):
        c = rng.uniform(-1, 1, 17) + 1j * rng.uniform(-1, 1, 17)
        c[0] = 1
        u = TruncatedSeries(c)
        assert np.max(np.abs(series_exp(series_log(u)).coeffs - c)) < 1e-10


def test_series_is_immutable():
    u = TruncatedSeries([1, 2, 3])
    with pytest.raises(ValueError):
        u.coeffs[0] = 5


def test_truncate_cannot_extend():
    with pytest.raises(InsufficientOrder):
        TruncatedSeries([1, 2]).truncate(3)


def test_dilate():
    np.testing.assert_array_equal(TruncatedSeries([1, 2, 3]).dilate(2).coeffs, [1, 0, 2, 0, 3])


# ---------------------------------------------------------------- bivariate


def koebe_f2(N):
    c = np.zeros(N + 1)
    c[1::2] = 1.0
    return TruncatedSeries(c)


def closed_form_kernel(M):
    """(1 + tz) / ((1 - t^2)(1 - z^2)) by explicit enumeration."""
    out = np.zeros((M + 1, M + 1))
    for e, coef in ((0, 1.0), (1, 1.0)):
        for a in range(0, M + 1, 2):
            for b in range(0, M + 1, 2):
                i, j = a + e, b + e
                if i + j <= M:
                    out[i, j] += coef
    return out


def closed_form_koebe_log(M):
    """log(1 + tz) - log(1 - t^2) - log(1 - z^2)."""
    out = np.zeros((M + 1, M + 1))
    for k in range(1, M + 1):
        if 2 * k <= M:
            out[k, k] += (-1) ** (k + 1) / k
        if 2 * k <= M:
            out[2 * k, 0] += 1 / k
            out[0, 2 * k] += 1 / k
    return out


def test_kernel_identity():
    F = divided_difference_kernel(TruncatedSeries([0, 1, 0, 0, 0]), 3)
    want = np.zeros((4, 4))
    want[0, 0] = 1
    np.testing.assert_array_equal(F.coeffs, want)


def test_kernel_one_term():
    F = divided_difference_kernel(TruncatedSeries([0, 1, 2.5, 0]), 2)
    assert F[0, 0] == 1 and F[1, 0] == 2.5 and F[0, 1] == 2.5 and F[1, 1] == 0 and F[2, 0] == 0


def test_kernel_koebe_closed_form():
    F = divided_difference_kernel(koebe_f2(8), 7)
    np.testing.assert_allclose(F.coeffs, closed_form_kernel(7), atol=1e-12)


def test_kernel_symmetric_exactly():
    rng = np.random.default_rng(0)
    c = rng.normal(size=12) + 1j * rng.normal(size=12)
    c[0], c[1] = 0, 1
    F = divided_difference_kernel(TruncatedSeries(c), 10)
    assert F.is_symmetric(tol=0.0)


def test_kernel_errors():
    with pytest.raises(NotNormalized):
        divided_difference_kernel(TruncatedSeries([0, 2, 0]))
    with pytest.raises(InsufficientOrder):
        divided_difference_kernel(TruncatedSeries([0, 1, 0]), 5)


def test_bivariate_log_unity():
    F = BivariateSeries(np.eye(1, 5, 0).T @ np.eye(1, 5, 0))
    assert np.all(bivariate_log(F).coeffs == 0)


def test_bivariate_log_product_variable():
    F = np.zeros((7, 7))
    F[0, 0] = F[1, 1] = 1
    L = bivariate_log(BivariateSeries(F))
    want = np.zeros((7, 7))
    want[1, 1], want[2, 2], want[3, 3] = 1, -1 / 2, 1 / 3
    np.testing.assert_allclose(L.coeffs, want, atol=1e-15)


def test_bivariate_log_koebe_closed_form():
    M = 12
    L = bivariate_log(divided_difference_kernel(koebe_f2(M + 1), M))
    np.testing.assert_allclose(L.coeffs, closed_form_koebe_log(M), atol=1e-12)


def test_bivariate_log_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        bivariate_log(BivariateSeries(2 * np.ones((3, 3))))


def test_bivariate_mul_naive():
    rng = np.random.default_rng(1)
    M = 6
    a = BivariateSeries(rng.normal(size=(M + 1, M + 1)))
    b = BivariateSeries(rng.normal(size=(M + 1, M + 1)))
    want = np.zeros((M + 1, M + 1), dtype=complex)
    for i in range(M + 1):
        for j in range(M + 1):
            for k in range(M + 1):
                for l in range(M + 1):
                    if i + j + k + l <= M:
                        want[i + k, j + l] += a.coeffs[i, j] * b.coeffs[k, l]
    np.testing.assert_allclose(bivariate_mul(a, b).coeffs, want, atol=1e-12)


def test_entries_beyond_degree_absent():
    F = BivariateSeries(np.ones((4, 4)))
    assert F.coeffs[3, 1] == 0 and F.coeffs[2, 2] == 0
    with pytest.raises(IndexError):
        F[2, 2]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.floats(-1, 1), st.floats(-1, 1)), min_size=3, max_size=11))
def test_bivariate_log_symmetry_and_roundtrip(xs):
    c = [0, 1] + [complex(a, b) for a, b in xs]
    F = divided_difference_kernel(TruncatedSeries(c))
    L = bivariate_log(F)
    scale = max(1.0, np.max(np.abs(F.coeffs))) ** F.total_degree
    assert np.max(np.abs(L.coeffs - L.coeffs.T)) <= 1e-12 * scale
    assert np.max(np.abs(bivariate_exp(L).coeffs - F.coeffs)) < 1e-10 * scale
