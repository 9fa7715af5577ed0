"""Spectral density matrix of bivariate fGn.

The density is an aliased infinite sum over frequency shifts of 2*pi*n
with power-law weights; it is evaluated by symmetric truncation plus an
Euler-Maclaurin tail correction so the default 1e-10 relative tolerance
is reachable even for slowly decaying tails (H_j + H_k close to 0).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as _gamma

from .errors import NonConvergence, SingularFrequency
from .params import ProcessParams, Variant

__all__ = [
    "SpectralConstants",
    "spectral_constants",
    "fgn_spectral_density",
    "fgn_spectral_density_grid",
    "fgn_spectral_asymptote",
    "wrap_frequency",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SpectralConstants:
    """Low-frequency constants of the spectral density matrix.

    ``c_tilde`` is the 2x2 complex coefficient matrix (diagonal real and
    nonnegative, c_21 = conj(c_12)); ``d`` holds the memory parameters
    d_j = H_j - 1/2.
    """

    c_tilde: np.ndarray
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "c_tilde", np.asarray(self.c_tilde, dtype=complex))
        self.c_tilde.setflags(write=False)


def spectral_constants(p: ProcessParams) -> SpectralConstants:
    """Coefficient matrix of the spectral density for given parameters.

    Every entry follows from the generalized-power-law covariance by the
    (regularized) Fourier pair of w_jk(u)|u|^S:

        c_jk = sigma_j sigma_k Gamma(S+1) / (2 pi)
               * [rho_jk sin(pi S / 2) + i eta_jk cos(pi S / 2)],

    with S = H_j + H_k.  On the diagonal this reduces to
    sigma_j^2 Gamma(2H_j+1) sin(pi H_j) / (2 pi); the well-balanced
    off-diagonal is real (eta = 0) and c_21 = conj(c_12) always.
    """
    from .covariance import cross_params

    cs = cross_params(p)
    H = p.hurst
    sig = p.sigma
    c = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        for k in range(2):
            S = H[j] + H[k]
            c[j, k] = (
                sig[j] * sig[k] * _gamma(S + 1.0) / TWO_PI
                * (cs.rho_mat[j, k] * math.sin(math.pi * S / 2.0)
                   + 1j * cs.eta_mat[j, k] * math.cos(math.pi * S / 2.0))
            )
    return SpectralConstants(c, (p.H1 - 0.5, p.H2 - 0.5))


def wrap_frequency(lam):
    """Wrap a frequency into the principal interval (-pi, pi]."""
    out = math.remainder(lam, TWO_PI)
    if out <= -math.pi:
        out += TWO_PI
    return out


def _tail(x0, s):
    """Euler-Maclaurin estimate of sum_{n >= n0} (2*pi*n + off)^(-1-s)
    starting at abscissa x0 = 2*pi*n0 + off, together with an error
    proxy (the next E-M correction term)."""
    # integral from the midpoint below the first summed point
    xm = x0 - math.pi
    integral = xm ** (-s) / (TWO_PI * s)
    correction = (1.0 + s) * TWO_PI * xm ** (-2.0 - s) / 24.0
    err = (1.0 + s) * (2.0 + s) * (3.0 + s) * TWO_PI ** 3 * xm ** (-4.0 - s) * 7.0 / 5760.0
    return integral - correction, err


def fgn_spectral_density(lam, j, k, p: ProcessParams, rel_tol=1e-10,
                         max_terms=10 ** 6, sc: SpectralConstants | None = None):
    """Element f^1_jk(lambda) of the spectral density matrix, complex.

    Sums |1 - e^{-i lambda}|^2 * sum_n [(lam+2 pi n)_+^{1-S} c_jk
    + (lam+2 pi n)_-^{1-S} conj(c_jk)] / (lam+2 pi n)^2 with
    S = H_j + H_k, doubling the symmetric truncation until the estimated
    tail falls below ``rel_tol`` times the partial sum.

    Raises :class:`SingularFrequency` at lambda = 0 with S > 1 and
    :class:`NonConvergence` if the bound is not met within ``max_terms``.
    """
    if sc is None:
        sc = spectral_constants(p)
    S = p.hurst[j - 1] + p.hurst[k - 1]
    c = sc.c_tilde[j - 1, k - 1]
    lam = float(lam)
    if lam == 0.0:
        if S > 1.0 + 1e-12:
            raise SingularFrequency("spectral density diverges at lambda = 0 for H_j + H_k > 1")
        if abs(S - 1.0) <= 1e-12:
            return complex(c.real)
        return 0.0j
    pref = abs(1.0 - cmath.exp(-1j * lam)) ** 2
    beta = 1.0 - S

    N = 64
    while True:
        n = np.arange(-N, N + 1)
        x = lam + TWO_PI * n
        pos = x > 0
        terms = np.where(pos, np.abs(x) ** beta * c, np.abs(x) ** beta * np.conj(c))
        partial = complex(np.sum(terms / x ** 2))
        # analytic tails on both sides, with conservative error proxy
        tail_pos, err_pos = _tail(lam + TWO_PI * (N + 1), S)
        tail_neg, err_neg = _tail(-lam + TWO_PI * (N + 1), S)
        total = partial + c * tail_pos + np.conj(c) * tail_neg
        err = abs(c) * (err_pos + err_neg)
        if err <= rel_tol * max(abs(total), 1e-300) or abs(c) == 0.0:
            return pref * total
        if 2 * N > max_terms:
            raise NonConvergence(
                f"spectral sum did not reach rel_tol={rel_tol} within {max_terms} terms"
            )
        N *= 2


def fgn_spectral_density_grid(lams, j, k, p: ProcessParams, rel_tol=1e-10,
                              max_terms=10 ** 6):
    """Vectorized convenience wrapper over :func:`fgn_spectral_density`."""
    sc = spectral_constants(p)
    return np.array([
        fgn_spectral_density(lam, j, k, p, rel_tol, max_terms, sc=sc)
        for lam in np.asarray(lams, dtype=float)
    ])


def fgn_spectral_asymptote(lam, j, k, sc: SpectralConstants):
    """Low-frequency power law c_jk * lambda^{-(d_j + d_k)}."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise SingularFrequency("asymptote requires lambda > 0")
    out = sc.c_tilde[j - 1, k - 1] * lam ** (-(sc.d[j - 1] + sc.d[k - 1]))
    return out if out.ndim else complex(out)
