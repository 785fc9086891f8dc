import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import hyp2f1

from s3maxwell import hypergeom as hg

GRID = np.linspace(0.05, np.pi - 0.05, 128)


def test_series_small_cases():
    assert hg.hyp2f1_poly(0, 3.3, 1.7, 2 + 5j) == 1
    z = np.array([0.3, -1.2 + 0.4j, 2.0])
    np.testing.assert_allclose(hg.hyp2f1_poly(1, 2, 4, z), 1 - z / 2)
    assert hg.hyp2f1_poly(2, 2, 4, 1.0) == pytest.approx(0.3)


def test_coefficients_recurrence():
    c = hg.poly_coefficients(4, 3, 6)
    assert len(c) == 5 and c[0] == 1
    for k in range(4):
        assert c[k + 1] / c[k] == pytest.approx((k - 4) * (3 + k) / ((6 + k) * (k + 1)))


@pytest.mark.parametrize("n,gamma", [(-1, 4), (1.5, 4), (2, 0), (2, -3)])
def test_invalid_parameters(n, gamma):
    with pytest.raises(ValueError):
        hg.hyp2f1_poly(n, 2, gamma, 0.5)


@given(st.integers(0, 8), st.integers(1, 6), st.floats(-0.9, 0.9))
@settings(max_examples=60, deadline=None)
def test_matches_scipy_inside_unit_disk(n, j, x):
    assert hg.hyp2f1_poly(n, j + 1, 2 * j + 2, x).real == pytest.approx(
        hyp2f1(-n, j + 1, 2 * j + 2, x), rel=1e-10, abs=1e-12)


def test_no_overflow_for_large_j():
    val = hg.hyp2f1_poly(10, 21, 42, 2.0)
    assert np.isfinite(val)


def test_profile_closed_forms():
    np.testing.assert_allclose(hg.profile_f(1, 0, GRID), -4 * np.sin(GRID) ** 2, atol=1e-10)
    np.testing.assert_allclose(hg.profile_f(1, 1, GRID), -4 * np.sin(GRID) ** 2 * np.cos(GRID),
                               atol=1e-10)
    assert hg.profile_f(1, 0, np.pi / 2) == pytest.approx(-4)


def test_exponential_form_matches_literal_power():
    x = np.linspace(0.05, 1.5, 40)
    for j in range(1, 4):
        for n in range(4):
            np.testing.assert_allclose(hg.profile_f(j, n, x), hg.profile_f_literal(j, n, x),
                                       atol=1e-12)


def test_derivative_closed_form():
    np.testing.assert_allclose(hg.profile_derivative(1, 0, GRID), -4 * np.sin(2 * GRID), atol=1e-12)
    assert hg.profile_derivative(1, 0, np.pi / 2) == pytest.approx(0, abs=1e-14)


def test_derivatives_match_finite_differences():
    rng = np.random.default_rng(11)
    h = 1e-5
    for chi in rng.uniform(0.1, np.pi - 0.1, 20):
        for j, n in [(1, 0), (2, 1), (3, 3), (4, 2)]:
            f, df, d2f = hg.profile_derivatives(j, n, chi)
            fd1 = (hg.profile_f(j, n, chi + h) - hg.profile_f(j, n, chi - h)) / (2 * h)
            fd2 = (hg.profile_derivative(j, n, chi + h) - hg.profile_derivative(j, n, chi - h)) / (2 * h)
            scale = max(1.0, abs(f))
            assert abs(df - fd1) <= 1e-7 * scale
            assert abs(d2f - fd2) <= 1e-6 * scale


@pytest.mark.parametrize("j", range(1, 5))
@pytest.mark.parametrize("n", range(0, 4))
def test_profile_solves_reduced_equation(j, n):
    f, _, d2f = hg.profile_derivatives(j, n, GRID)
    w = n + 1 + j
    res = d2f + (w ** 2 - j * (j + 1) / np.sin(GRID) ** 2) * f
    assert np.abs(res).max() <= 1e-9


@pytest.mark.parametrize("j", range(1, 5))
@pytest.mark.parametrize("n", range(0, 4))
def test_profile_real_up_to_global_phase(j, n):
    f = hg.profile_f(j, n, GRID)
    ref = hg.profile_f(j, n, np.pi / 2 + 0.123)
    aligned = f * np.conj(ref) / abs(ref)
    assert np.abs(aligned.imag).max() <= 1e-10 * np.abs(f).max()


@pytest.mark.parametrize("j", range(1, 4))
@pytest.mark.parametrize("n", range(0, 3))
def test_regular_at_both_poles(j, n):
    eps = np.geomspace(1e-3, 1e-2, 12)
    left = np.polyfit(np.log(eps), np.log(np.abs(hg.profile_f(j, n, eps))), 1)[0]
    right = np.polyfit(np.log(eps), np.log(np.abs(hg.profile_f(j, n, np.pi - eps))), 1)[0]
    assert left == pytest.approx(j + 1, abs=0.05)
    assert right == pytest.approx(j + 1, abs=0.05)
