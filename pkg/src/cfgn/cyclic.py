"""Theoretical statistics of the cyclic process.

Time-varying autocovariance, cyclic autocorrelation functions at the
three cyclic frequencies {0, +2*lambda0, -2*lambda0}, cyclic spectra, and
the large-lag / near-resonance asymptotic expansions.

The cyclic spectrum follows the lag-sum scale

    S^alpha(lambda) = sum_h R^alpha(h) e^{-i lambda h},

the same scale a truncated-lag estimator produces, so theory and
Monte Carlo curves are directly comparable.  Since the fGn spectral
density here carries a 1/(2 pi) normalization, composing the two adds an
explicit 2 pi factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .covariance import cross_params, fgn_ccvf
from .errors import UnknownCyclicFrequency
from .params import CfgnParams
from .spectral import (
    SpectralConstants,
    fgn_spectral_density,
    spectral_constants,
    wrap_frequency,
)

__all__ = [
    "AcvfValue",
    "AsymptoteCoeffs",
    "cyclic_frequencies",
    "acvf",
    "caf",
    "cyclic_spectrum",
    "asymptote_coeffs",
    "acvf_asymptote",
    "cyclic_spectrum_asymptote",
]

TWO_PI = 2.0 * math.pi

#: Tolerance for matching a requested cyclic frequency against
#: {0, +2*lambda0, -2*lambda0} and for the H1 == H2 trichotomy.
ALPHA_TOL = 1e-12


def cyclic_frequencies(cp: CfgnParams):
    """The set of non-zero cyclic frequencies {0, +2 lambda0, -2 lambda0}."""
    return (0.0, 2.0 * cp.lambda0, -2.0 * cp.lambda0)


def _alpha_kind(alpha, cp):
    """Classify alpha as 0, +1 (2 lambda0) or -1 (-2 lambda0)."""
    if abs(alpha) <= ALPHA_TOL:
        return 0
    if abs(alpha - 2.0 * cp.lambda0) <= ALPHA_TOL:
        return 1
    if abs(alpha + 2.0 * cp.lambda0) <= ALPHA_TOL:
        return -1
    raise UnknownCyclicFrequency(
        f"alpha={alpha} not in {{0, +/-{2.0 * cp.lambda0}}}"
    )


def _gammas(h, cp):
    """The four fGn covariances weighted by the modulation amplitudes:
    (a1^2 g11, a2^2 g22, a1 a2 g12, a1 a2 g21) at lag h."""
    p = cp.base
    g11 = cp.a1 ** 2 * fgn_ccvf(h, 1, 1, p)
    g22 = cp.a2 ** 2 * fgn_ccvf(h, 2, 2, p)
    g12 = cp.a1 * cp.a2 * fgn_ccvf(h, 1, 2, p)
    g21 = cp.a1 * cp.a2 * fgn_ccvf(h, 2, 1, p)
    return g11, g22, g12, g21


@dataclass(frozen=True)
class AcvfValue:
    """Time-varying autocovariance split into its time-invariant and
    periodic parts: total = stationary + cyclic."""

    total: float
    stationary: float
    cyclic: float


def acvf(n, h, cp: CfgnParams):
    """Autocovariance Cov(Y(n+h), Y(n)) with its decomposition.

    Returns an :class:`AcvfValue` for scalar inputs; arrays broadcast and
    yield an object with array fields.
    """
    n = np.asarray(n, dtype=float)
    h_arr = np.asarray(h)
    g11, g22, g12, g21 = _gammas(h_arr, cp)
    lam0 = cp.lambda0
    h_f = np.asarray(h_arr, dtype=float)
    stat = 0.5 * ((g11 + g22) * np.cos(lam0 * h_f) + (g21 - g12) * np.sin(lam0 * h_f))
    cyc = 0.5 * (
        (g11 - g22) * np.cos(lam0 * (2 * n + h_f))
        + (g21 + g12) * np.sin(lam0 * (2 * n + h_f))
    )
    total = stat + cyc
    if np.ndim(total) == 0:
        return AcvfValue(float(total), float(stat), float(cyc))
    return AcvfValue(total, np.broadcast_to(stat, total.shape),
                     np.broadcast_to(cyc, total.shape))


def caf(alpha, h, cp: CfgnParams):
    """Cyclic autocorrelation R^alpha(h), complex (scalar or array in h).

    R^0(h) is the stationary part of the autocovariance;
    R^{2 lambda0}(h) = e^{i lambda0 h}/4 * [(g11 - g22) - i (g21 + g12)](h)
    and R^{-2 lambda0}(h) is its complex conjugate.
    """
    kind = _alpha_kind(alpha, cp)
    h_arr = np.asarray(h)
    g11, g22, g12, g21 = _gammas(h_arr, cp)
    h_f = np.asarray(h_arr, dtype=float)
    if kind == 0:
        lam0 = cp.lambda0
        out = (0.5 * ((g11 + g22) * np.cos(lam0 * h_f)
                      + (g21 - g12) * np.sin(lam0 * h_f))).astype(complex)
    else:
        out = np.exp(1j * cp.lambda0 * h_f) / 4.0 * ((g11 - g22) - 1j * (g21 + g12))
        if kind == -1:
            out = np.conj(out)
    return complex(out) if np.ndim(out) == 0 else out


def cyclic_spectrum(alpha, lam, cp: CfgnParams, rel_tol=1e-10,
                    sc: SpectralConstants | None = None):
    """Cyclic spectrum S^alpha(lambda) on the lag-sum scale.

    Composed from the fGn spectral density at modulation-shifted
    frequencies (wrapped into the principal interval):

        S^{2 lambda0}(lambda) = (2 pi / 4) [a1^2 f11 - a2^2 f22
                                 - 2 i a1 a2 Re f12](lambda - lambda0),

        S^0(lambda) = (2 pi / 4) sum_{s=+-1} [a1^2 f11 + a2^2 f22
                      + 2 s a1 a2 Im f12](lambda - s lambda0),

    and S^{-2 lambda0}(lambda) = conj(S^{2 lambda0}(-lambda)).
    """
    kind = _alpha_kind(alpha, cp)
    if kind == -1:
        return np.conj(cyclic_spectrum(-alpha, -lam, cp, rel_tol, sc=sc))
    p = cp.base
    if sc is None:
        sc = spectral_constants(p)
    w11, w22, w12 = cp.a1 ** 2, cp.a2 ** 2, cp.a1 * cp.a2

    def f(j, k, mu):
        return fgn_spectral_density(wrap_frequency(mu), j, k, p, rel_tol, sc=sc)

    if kind == 1:
        mu = lam - cp.lambda0
        val = (w11 * f(1, 1, mu) - w22 * f(2, 2, mu)
               - 2j * w12 * np.real(f(1, 2, mu)))
        return TWO_PI / 4.0 * val
    total = 0.0j
    for s in (-1, 1):
        mu = lam - s * cp.lambda0
        total += (w11 * f(1, 1, mu) + w22 * f(2, 2, mu)
                  + 2.0 * s * w12 * np.imag(f(1, 2, mu)))
    return TWO_PI / 4.0 * total


@dataclass(frozen=True)
class AsymptoteCoeffs:
    """Coefficients of the large-lag and near-resonance expansions.

    ``c_jk`` drives the power-law decay of the fGn covariances,
    (A_stat, phi_stat) and (A_cyc, phi_cyc) the equal-Hurst
    amplitude-phase form, and ``K`` the cyclic-spectrum pole coefficient
    at |lambda - lambda0|^(-2 d_max).
    """

    c_jk: np.ndarray
    A_stat: float
    phi_stat: float
    A_cyc: float
    phi_cyc: float
    K: complex
    d_max: float

    def __post_init__(self):
        object.__setattr__(self, "c_jk", np.asarray(self.c_jk, dtype=float))
        self.c_jk.setflags(write=False)


def asymptote_coeffs(cp: CfgnParams) -> AsymptoteCoeffs:
    """Asymptotic coefficients for given cyclic-process parameters."""
    p = cp.base
    cs = cross_params(p)
    H = p.hurst
    sig = p.sigma
    amp = np.array([[cp.a1 ** 2, cp.a1 * cp.a2], [cp.a1 * cp.a2, cp.a2 ** 2]])
    c = np.empty((2, 2))
    for j in range(2):
        for k in range(2):
            S = H[j] + H[k]
            c[j, k] = sig[j] * sig[k] * cs.rho_mat[j, k] * S * (S - 1.0) / 2.0
    ca = amp * c  # amplitude-weighted, used in the combined forms
    A_stat = 0.5 * math.hypot(ca[0, 0] + ca[1, 1], ca[1, 0] - ca[0, 1])
    phi_stat = math.atan2(ca[1, 0] - ca[0, 1], ca[0, 0] + ca[1, 1])
    A_cyc = 0.5 * math.hypot(ca[0, 0] - ca[1, 1], ca[1, 0] + ca[0, 1])
    phi_cyc = math.atan2(ca[1, 0] + ca[0, 1], ca[0, 0] - ca[1, 1])

    sc = spectral_constants(p)
    d1, d2 = sc.d
    ct = sc.c_tilde
    # 2 pi keeps K on the same (lag-sum) scale as cyclic_spectrum
    if d1 - d2 > ALPHA_TOL:
        K = TWO_PI / 4.0 * amp[0, 0] * ct[0, 0]
    elif d2 - d1 > ALPHA_TOL:
        K = -TWO_PI / 4.0 * amp[1, 1] * ct[1, 1]
    else:
        K = TWO_PI / 4.0 * (amp[0, 0] * ct[0, 0] - amp[1, 1] * ct[1, 1]
                            - 2j * amp[0, 1] * np.real(ct[0, 1]))
    return AsymptoteCoeffs(c, A_stat, phi_stat, A_cyc, phi_cyc, complex(K),
                           max(d1, d2))


def acvf_asymptote(n, h, cp: CfgnParams, coeffs: AsymptoteCoeffs | None = None):
    """Large-lag expansion of the autocovariance, h >= 1.

    Three cases by strict Hurst trichotomy: the dominant coordinate's
    power law when H1 != H2, and the amplitude-phase form at H1 == H2.
    """
    if coeffs is None:
        coeffs = asymptote_coeffs(cp)
    p = cp.base
    lam0 = cp.lambda0
    n = np.asarray(n, dtype=float)
    h = np.asarray(h, dtype=float)
    c = coeffs.c_jk
    if p.H1 - p.H2 > ALPHA_TOL:
        out = (cp.a1 ** 2 * c[0, 0] / 2.0 * h ** (2 * p.H1 - 2.0)
               * (np.cos(lam0 * h) + np.cos(lam0 * (2 * n + h))))
    elif p.H2 - p.H1 > ALPHA_TOL:
        out = (cp.a2 ** 2 * c[1, 1] / 2.0 * h ** (2 * p.H2 - 2.0)
               * (np.cos(lam0 * h) - np.cos(lam0 * (2 * n + h))))
    else:
        out = h ** (2 * p.H1 - 2.0) * (
            coeffs.A_stat * np.cos(lam0 * h - coeffs.phi_stat)
            + coeffs.A_cyc * np.cos(lam0 * (2 * n + h) - coeffs.phi_cyc)
        )
    return float(out) if np.ndim(out) == 0 else out


def cyclic_spectrum_asymptote(lam, cp: CfgnParams,
                              coeffs: AsymptoteCoeffs | None = None):
    """Near-resonance power law K |lambda - lambda0|^(-2 d_max) of the
    cyclic spectrum at frequency 2*lambda0."""
    if coeffs is None:
        coeffs = asymptote_coeffs(cp)
    lam = np.asarray(lam, dtype=float)
    out = coeffs.K * np.abs(lam - cp.lambda0) ** (-2.0 * coeffs.d_max)
    return complex(out) if np.ndim(out) == 0 else out
