"""Covariance-layer tests: cross-structure constants, the bivariate fBm
covariance, and its unit-lag increment (fGn) covariances."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cfgn import (
    DomainError,
    ProcessParams,
    SingularParameter,
    Variant,
    cross_params,
    fbm_ccvf,
    fgn_ccvf,
    fgn_ccvf_series,
    normalization_constant,
)
from conftest import param_grid


def second_difference(h, j, k, p):
    """Cov(b_j(h), b_k(0)) from the integrated-process covariance:
    the four-term expansion of unit-lag increments."""
    return (fbm_ccvf(1, h + 1, j, k, p) - fbm_ccvf(1, h, j, k, p)
            - fbm_ccvf(0, h + 1, j, k, p) + fbm_ccvf(0, h, j, k, p))


# ---------------------------------------------------------------- constants

def test_equal_hurst_cross_correlation_reduces_to_tangent():
    # H1 = H2 = 0.25, rho = 1: coefficient collapses to tan(pi/4) = 1
    # and the causal asymmetry vanishes with the phase difference.
    p = ProcessParams(H1=0.25, H2=0.25, rho=1.0, variant=Variant.CAUSAL)
    cs = cross_params(p)
    assert cs.rho_mat[0, 1] == pytest.approx(1.0, abs=1e-14)
    assert cs.eta_mat[0, 1] == pytest.approx(0.0, abs=1e-14)


def test_cross_structure_regression_values(reference_params):
    # Frozen 12-digit values, independently validated against the
    # second-difference and lag-sum oracles at build time.
    cs = cross_params(reference_params)
    assert cs.rho_mat[0, 1] == pytest.approx(-0.770270143344, abs=1e-12)
    assert cs.eta_mat[0, 1] == pytest.approx(-0.392472241020, abs=1e-12)
    assert cs.norm_consts[0] == pytest.approx(0.880725683364, abs=1e-12)
    assert cs.norm_consts[1] == pytest.approx(1.091809130884, abs=1e-12)


def test_cross_structure_symmetries(reference_params):
    cs = cross_params(reference_params)
    assert cs.rho_mat[0, 1] == cs.rho_mat[1, 0]
    assert cs.eta_mat[0, 1] == -cs.eta_mat[1, 0]
    assert cs.eta_mat[0, 0] == cs.eta_mat[1, 1] == 0.0
    wb = cross_params(ProcessParams(H1=0.4, H2=0.7, rho=0.15,
                                    variant=Variant.WELL_BALANCED))
    assert np.all(wb.eta_mat == 0.0)
    assert wb.rho_mat[0, 1] == pytest.approx(cs.rho_mat[0, 1], abs=1e-14)


def test_normalization_constants_at_half():
    # Brownian-increment limit: the causal constant is exactly 1 and the
    # well-balanced constant attains its analytic limit 1/2.
    assert normalization_constant(0.5, Variant.CAUSAL) == pytest.approx(1.0, abs=1e-14)
    wb = normalization_constant(0.5, Variant.WELL_BALANCED, allow_half_wb=True)
    assert wb == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(SingularParameter):
        normalization_constant(0.5, Variant.WELL_BALANCED)


def test_normalization_constant_continuity_at_half():
    # the gated limit value agrees with nearby well-balanced evaluations
    eps = 1e-7
    left = normalization_constant(0.5 - eps, Variant.WELL_BALANCED)
    right = normalization_constant(0.5 + eps, Variant.WELL_BALANCED)
    mid = normalization_constant(0.5, Variant.WELL_BALANCED, allow_half_wb=True)
    assert left == pytest.approx(mid, rel=1e-5)
    assert right == pytest.approx(mid, rel=1e-5)


# ------------------------------------------------------------- validation

def test_parameter_domain_rejections():
    with pytest.raises(DomainError):
        ProcessParams(H1=0.0, H2=0.5)
    with pytest.raises(DomainError):
        ProcessParams(H1=0.5, H2=1.2)
    with pytest.raises(DomainError):
        ProcessParams(H1=0.4, H2=0.6, sigma1=-1.0)
    with pytest.raises(DomainError):
        ProcessParams(H1=0.4, H2=0.6, rho=1.5)
    with pytest.raises(SingularParameter):
        ProcessParams(H1=0.3, H2=0.7, rho=0.2)
    # H1 + H2 = 1 is fine when the coordinates are uncorrelated
    ProcessParams(H1=0.3, H2=0.7, rho=0.0)


# ------------------------------------------------------------- covariances

def test_variance_at_lag_zero():
    for p in param_grid():
        assert fgn_ccvf(0, 1, 1, p) == pytest.approx(p.sigma1 ** 2, abs=1e-12)
        assert fgn_ccvf(0, 2, 2, p) == pytest.approx(p.sigma2 ** 2, abs=1e-12)


def test_fbm_covariance_symmetry(reference_params):
    p = reference_params
    # Cov(Z_j(t), Z_k(s)) = Cov(Z_k(s), Z_j(t)): swap times and indices
    for s, t in [(1, 5), (2, 2), (0, 7), (3, 10)]:
        for j, k in [(1, 1), (1, 2), (2, 1), (2, 2)]:
            assert fbm_ccvf(s, t, j, k, p) == pytest.approx(
                fbm_ccvf(t, s, k, j, p), abs=1e-13)


def test_fbm_marginal_is_fractional_brownian(reference_params):
    # diagonal blocks reduce to sigma^2/2 (t^2H + s^2H - |t-s|^2H)
    p = reference_params
    for s, t, j, H in [(2, 5, 1, p.H1), (3, 7, 2, p.H2)]:
        expect = 0.5 * (t ** (2 * H) + s ** (2 * H) - abs(t - s) ** (2 * H))
        assert fbm_ccvf(s, t, j, j, p) == pytest.approx(expect, abs=1e-12)


def test_second_difference_consistency_grid():
    # the stationary covariances equal the four-term integrated-process
    # expansion across the whole parameter grid
    hs = np.arange(0, 101)
    for p in param_grid():
        for j, k in [(1, 1), (1, 2), (2, 1), (2, 2)]:
            direct = fgn_ccvf(hs, j, k, p)
            expanded = np.array([second_difference(int(h), j, k, p) for h in hs])
            assert np.max(np.abs(direct - expanded)) < 1e-10


def test_stationarity_of_increments(reference_params):
    # Cov(b_j(n+h), b_k(n)) does not depend on the base point n
    p = reference_params
    for n in (0, 3, 11):
        for h in (0, 1, 5):
            for j, k in [(1, 2), (2, 1), (1, 1)]:
                shifted = (fbm_ccvf(n + 1, n + h + 1, j, k, p)
                           - fbm_ccvf(n + 1, n + h, j, k, p)
                           - fbm_ccvf(n, n + h + 1, j, k, p)
                           + fbm_ccvf(n, n + h, j, k, p))
                assert shifted == pytest.approx(fgn_ccvf(h, j, k, p), abs=1e-11)


def test_negative_lag_reflection(reference_params):
    p = reference_params
    for h in (1, 2, 7, 30):
        assert fgn_ccvf(-h, 1, 2, p) == pytest.approx(fgn_ccvf(h, 2, 1, p), abs=1e-14)
        assert fgn_ccvf(-h, 1, 1, p) == pytest.approx(fgn_ccvf(h, 1, 1, p), abs=1e-14)


def test_wellbalanced_cross_covariance_is_even():
    p = ProcessParams(H1=0.4, H2=0.7, rho=0.15, variant=Variant.WELL_BALANCED)
    hs = np.arange(0, 30)
    assert np.allclose(fgn_ccvf(hs, 1, 2, p), fgn_ccvf(hs, 2, 1, p), atol=1e-14)


def test_causal_cross_covariance_is_asymmetric(reference_params):
    p = reference_params
    assert abs(fgn_ccvf(3, 1, 2, p) - fgn_ccvf(3, 2, 1, p)) > 1e-3
    assert fgn_ccvf(3, 1, 2, p) == pytest.approx(-0.00785844209893, abs=1e-12)
    assert fgn_ccvf(3, 2, 1, p) == pytest.approx(-0.02418579787573, abs=1e-12)


def test_uncorrelated_coordinates_have_zero_cross():
    for variant in Variant:
        p = ProcessParams(H1=0.4, H2=0.7, rho=0.0, variant=variant)
        hs = np.arange(-10, 11)
        assert np.max(np.abs(fgn_ccvf(hs, 1, 2, p))) < 1e-15
        assert np.max(np.abs(fgn_ccvf(hs, 2, 1, p))) < 1e-15


def test_series_matches_scalar(reference_params):
    p = reference_params
    series = fgn_ccvf_series(25, 1, 2, p)
    assert series.shape == (26,)
    for h in (0, 1, 13, 25):
        assert series[h] == pytest.approx(fgn_ccvf(h, 1, 2, p), abs=1e-15)


@settings(max_examples=40, deadline=None)
@given(
    H1=st.floats(0.05, 0.95),
    H2=st.floats(0.05, 0.95),
    rho=st.floats(-1.0, 1.0),
    h=st.integers(0, 60),
    causal=st.booleans(),
)
def test_second_difference_property(H1, H2, rho, h, causal):
    if abs(H1 + H2 - 1.0) < 1e-6:
        rho = 0.0
    variant = Variant.CAUSAL if causal else Variant.WELL_BALANCED
    p = ProcessParams(H1=H1, H2=H2, rho=rho, variant=variant,
                      allow_half_wb=True)
    for j, k in [(1, 2), (2, 2)]:
        assert fgn_ccvf(h, j, k, p) == pytest.approx(
            second_difference(h, j, k, p), abs=1e-9)
