"""Sampler tests: covariance assembly, Cholesky policy, seeded
reproducibility, and the modulated-path construction."""

import numpy as np
import pytest

from cfgn import (
    CfgnParams,
    Ensemble,
    LengthMismatch,
    ProcessParams,
    Variant,
    assemble_joint_covariance,
    cfgn_path,
    cholesky_factor,
    cross_params,
    fgn_ccvf,
    make_ensemble,
    sample_fgn2d,
)
from conftest import param_grid


def valid_grid():
    """Grid points whose derived cross-correlation admits a covariance;
    corners with |rho_12| > 1 describe no Gaussian process and are
    excluded from positive-definiteness checks."""
    return [p for p in param_grid()
            if np.max(np.abs(cross_params(p).rho_mat)) <= 1.0 + 1e-12]


def test_assembled_covariance_structure(reference_params):
    p = reference_params
    n = 16
    cov = assemble_joint_covariance(n, p)
    assert cov.shape == (2 * n, 2 * n)
    assert np.allclose(cov, cov.T, atol=1e-13)
    assert np.allclose(np.diag(cov)[:n], p.sigma1 ** 2)
    assert np.allclose(np.diag(cov)[n:], p.sigma2 ** 2)
    # spot-check the asymmetric cross block: entry (m, l) = gamma_12(m - l)
    assert cov[2, n + 5] == pytest.approx(fgn_ccvf(-3, 1, 2, p), abs=1e-14)
    assert cov[5, n + 2] == pytest.approx(fgn_ccvf(3, 1, 2, p), abs=1e-14)


def test_cholesky_zero_jitter_on_valid_grid():
    for p in valid_grid():
        _, jitter = cholesky_factor(assemble_joint_covariance(64, p))
        assert jitter == 0.0


def test_cholesky_zero_jitter_reference_long(reference_params):
    _, jitter = cholesky_factor(assemble_joint_covariance(512, reference_params))
    assert jitter == 0.0


def test_invalid_cross_correlation_is_indefinite():
    # |rho_12| = 1.4 at this corner: no such Gaussian process exists, and
    # the assembled matrix is indefinite by a margin jitter cannot mask
    p = ProcessParams(H1=0.5, H2=0.7, rho=0.5, variant=Variant.CAUSAL)
    assert np.max(np.abs(cross_params(p).rho_mat)) > 1.0
    eigs = np.linalg.eigvalsh(assemble_joint_covariance(64, p))
    assert eigs.min() < -1e-3


def test_seeded_paths_are_frozen(reference_params):
    # bitwise regression of the counter-based stream (seed 12345, n = 6)
    paths = sample_fgn2d(6, reference_params, 2, 12345)
    expect_b1 = [0.375565930368478, 0.698022907154731, 0.670430778908302,
                 -1.132993854143656, -0.899254794275008, 1.04080377791102]
    expect_b2 = [-0.341422159065928, -1.139362837602147, 0.454625904577588,
                 1.468634258090678, 0.085243614632399, 0.448214435338031]
    assert np.allclose(paths[0, 0], expect_b1, atol=1e-13)
    assert np.allclose(paths[1, 1], expect_b2, atol=1e-13)


def test_replication_prefix_is_stable(reference_params):
    # replication r depends only on (seed, r), never on the total count
    small = sample_fgn2d(12, reference_params, 3, 777)
    big = sample_fgn2d(12, reference_params, 8, 777)
    assert np.array_equal(small, big[:3])


def test_modulated_path_construction(reference_cfgn):
    b1 = np.array([1.0, 2.0, -1.0])
    b2 = np.array([0.5, -0.5, 1.5])
    y = cfgn_path(b1, b2, reference_cfgn)
    lam0 = reference_cfgn.lambda0
    for n in range(3):
        expect = np.cos(lam0 * n) * b1[n] + np.sin(lam0 * n) * b2[n]
        assert y[n] == pytest.approx(expect, abs=1e-15)
    with pytest.raises(LengthMismatch):
        cfgn_path(b1, b2[:2], reference_cfgn)


def test_ensemble_cache_roundtrip(tmp_path, reference_cfgn):
    e1 = make_ensemble(reference_cfgn, 32, 4, 99, cache_dir=tmp_path)
    e2 = make_ensemble(reference_cfgn, 32, 4, 99, cache_dir=tmp_path)
    assert np.array_equal(e1.paths, e2.paths)
    assert e1.content_key() == e2.content_key()
    # different seed: different key, different paths
    e3 = make_ensemble(reference_cfgn, 32, 4, 100, cache_dir=tmp_path)
    assert e3.content_key() != e1.content_key()
    assert not np.array_equal(e3.paths, e1.paths)


def test_ensemble_csv_layout(tmp_path, reference_cfgn):
    e = make_ensemble(reference_cfgn, 4, 2, 5)
    dest = tmp_path / "e.csv"
    e.to_csv(dest, header_lines=["seed=5"])
    lines = dest.read_text().splitlines()
    assert lines[0] == "# seed=5"
    assert lines[1] == "replication,n,value"
    assert len(lines) == 2 + 2 * 4
    r, n, v = lines[2].split(",")
    assert (r, n) == ("0", "0")
    assert float(v) == pytest.approx(e.paths[0, 0])


def test_empirical_covariance_quick(reference_params):
    # small-n ensemble covariance against the assembled matrix (6 SE);
    # the full-precision version runs in the acceptance suite
    n, M = 4, 20000
    paths = sample_fgn2d(n, reference_params, M, 4242).reshape(M, 2 * n)
    emp = paths.T @ paths / M
    cov = assemble_joint_covariance(n, reference_params)
    se = np.sqrt((np.outer(np.diag(cov), np.diag(cov)) + cov ** 2) / M)
    assert np.max(np.abs(emp - cov) / se) < 6.0
