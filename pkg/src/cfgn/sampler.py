"""Exact simulation of bivariate fGn and cyclic trajectories.

The joint Gaussian vector (b1(0..n-1), b2(0..n-1)) is sampled by dense
Cholesky factorization of the assembled 2n x 2n covariance.  The causal
cross blocks are lag-asymmetric, which rules out naive circulant
embedding; at the path lengths of interest (n <= ~1024) a dense factor
is cheap and exact.

Randomness comes from counter-based Philox streams keyed by
(seed, replication), with standard normals produced by inverse-CDF
transform, so any subset of replications is reproducible independently
of the total replication count, across platforms and thread counts.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.special import ndtri

from .covariance import fgn_ccvf_series
from .errors import FactorizationFailure, LengthMismatch
from .params import CfgnParams, ProcessParams

__all__ = [
    "Ensemble",
    "assemble_joint_covariance",
    "cholesky_factor",
    "sample_fgn2d",
    "cfgn_path",
    "make_ensemble",
]

log = logging.getLogger(__name__)

JITTER_ATTEMPTS = 3


def assemble_joint_covariance(n, p: ProcessParams):
    """Covariance of the stacked vector (b1(0..n-1), b2(0..n-1)).

    Block (j, k) holds Cov(b_j(m), b_k(l)) = gamma_jk(m - l) at entry
    (m, l); the result is symmetric by the reflection
    gamma_jk(-h) = gamma_kj(h).
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n)
    lag = idx[:, None] - idx[None, :]  # m - l
    blocks = {}
    for j, k in ((1, 1), (1, 2), (2, 1), (2, 2)):
        blocks[j, k] = fgn_ccvf_series(n - 1, j, k, p)
    out = np.empty((2 * n, 2 * n))
    pos = lag >= 0
    for j in (1, 2):
        for k in (1, 2):
            block = np.where(pos, blocks[j, k][np.abs(lag)],
                             blocks[k, j][np.abs(lag)])
            out[(j - 1) * n:j * n, (k - 1) * n:k * n] = block
    return out


def cholesky_factor(cov, jitter_attempts=JITTER_ATTEMPTS):
    """Lower Cholesky factor with escalating-jitter fallback.

    Returns (L, jitter_used).  The base jitter is 1e-12 * trace / dim,
    escalated tenfold per retry; failures after ``jitter_attempts``
    retries raise :class:`FactorizationFailure`.
    """
    dim = cov.shape[0]
    base = 1e-12 * np.trace(cov) / dim
    jitter = 0.0
    for attempt in range(jitter_attempts + 1):
        try:
            L = np.linalg.cholesky(cov + jitter * np.eye(dim))
            if jitter > 0.0:
                log.warning("covariance required jitter %.3e (attempt %d)",
                            jitter, attempt)
            return L, jitter
        except np.linalg.LinAlgError:
            jitter = base * 10.0 ** attempt
    raise FactorizationFailure(
        f"Cholesky failed after jitter escalation up to {jitter:.3e}"
    )


def _standard_normals(seed, rep, count):
    """Inverse-CDF standard normals from the (seed, rep) Philox stream."""
    bitgen = np.random.Philox(key=np.array([seed, rep], dtype=np.uint64))
    u = np.random.Generator(bitgen).random(count)
    return ndtri(np.clip(u, 1e-300, 1.0 - 1e-16))


def sample_fgn2d(n, p: ProcessParams, M, seed, return_factor_info=False):
    """M exact replications of the bivariate fGn pair, shape (M, 2, n).

    The Cholesky factor is computed once and reused; replication r draws
    its normals from the substream keyed by (seed, r).
    """
    cov = assemble_joint_covariance(n, p)
    L, jitter = cholesky_factor(cov)
    M = int(M)
    z = np.empty((M, 2 * n))
    for r in range(M):
        z[r] = _standard_normals(int(seed), r, 2 * n)
    x = z @ L.T
    paths = x.reshape(M, 2, n)
    if return_factor_info:
        return paths, jitter
    return paths


def cfgn_path(b1, b2, cp: CfgnParams):
    """Modulated path Y(n) = a1 cos(lambda0 n) b1(n) + a2 sin(lambda0 n) b2(n),
    indexed from n = 0."""
    b1 = np.asarray(b1, dtype=float)
    b2 = np.asarray(b2, dtype=float)
    if b1.shape != b2.shape:
        raise LengthMismatch(f"coordinate lengths differ: {b1.shape} vs {b2.shape}")
    n = np.arange(b1.shape[-1])
    return (cp.a1 * np.cos(cp.lambda0 * n) * b1
            + cp.a2 * np.sin(cp.lambda0 * n) * b2)


@dataclass(frozen=True)
class Ensemble:
    """A seeded collection of simulated cyclic-process paths.

    ``paths`` is an (M, n) array; row r was generated from the Philox
    substream keyed by (seed, r), so the ensemble is bitwise reproducible
    and any prefix of replications is independent of M.
    """

    paths: np.ndarray
    seed: int
    params: CfgnParams
    jitter: float = 0.0

    def __post_init__(self):
        arr = np.asarray(self.paths, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 2:
            raise ValueError("paths must be an (M >= 1, n >= 2) array")
        object.__setattr__(self, "paths", arr)
        arr.setflags(write=False)

    @property
    def n_reps(self):
        return self.paths.shape[0]

    @property
    def n_points(self):
        return self.paths.shape[1]

    def content_key(self):
        """Hex digest identifying (params, n, M, seed)."""
        p = self.params
        b = p.base
        payload = json.dumps({
            "H": [b.H1, b.H2], "sigma": [b.sigma1, b.sigma2],
            "rho": b.rho, "variant": b.variant.value,
            "lambda0": p.lambda0, "a": [p.a1, p.a2],
            "n": self.n_points, "M": self.n_reps, "seed": self.seed,
        }, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_csv(self, path, header_lines=()):
        """Columnar CSV (replication, n, value)."""
        path = Path(path)
        with path.open("w", newline="") as fh:
            for line in header_lines:
                fh.write(f"# {line}\n")
            fh.write("replication,n,value\n")
            for r in range(self.n_reps):
                for t in range(self.n_points):
                    fh.write(f"{r},{t},{self.paths[r, t]:.17g}\n")

    def save_cache(self, directory):
        """Compact binary cache keyed by the content hash."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        out = directory / f"ensemble_{self.content_key()}.npz"
        np.savez_compressed(out, paths=self.paths, seed=self.seed,
                            jitter=self.jitter)
        return out

    @staticmethod
    def load_cache(directory, cp, n, M, seed):
        """Load a cached ensemble if present, else None."""
        probe = Ensemble(np.zeros((max(M, 1), max(n, 2))), seed, cp)
        f = Path(directory) / f"ensemble_{probe.content_key()}.npz"
        if not f.exists():
            return None
        data = np.load(f)
        return Ensemble(data["paths"], int(data["seed"]), cp,
                        float(data["jitter"]))


def make_ensemble(cp: CfgnParams, n, M, seed, cache_dir=None):
    """Simulate an ensemble of M cyclic paths of length n.

    Deterministic in (cp, n, M, seed); with ``cache_dir`` set, a binary
    cache is consulted and populated.
    """
    if cache_dir is not None:
        cached = Ensemble.load_cache(cache_dir, cp, n, M, seed)
        if cached is not None:
            return cached
    fgn, jitter = sample_fgn2d(n, cp.base, M, seed, return_factor_info=True)
    paths = cfgn_path(fgn[:, 0, :], fgn[:, 1, :], cp)
    ens = Ensemble(paths, int(seed), cp, jitter)
    if cache_dir is not None:
        ens.save_cache(cache_dir)
    return ens
