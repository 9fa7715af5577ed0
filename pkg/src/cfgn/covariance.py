"""Closed-form covariance structure of bivariate fBm and fGn.

Implements the exact cross-covariance of the causal and well-balanced
bivariate fractional Brownian motion, and the stationary covariance of its
unit-lag increment process (bivariate fGn).  All derived coefficients
(cross-correlation rho_jk, asymmetry eta_jk, normalization constants) are
exposed through :class:`CrossStructure`.

Conventions
-----------
* ``fbm_ccvf(s, t, j, k)`` is Cov(Z_j(t), Z_k(s)).
* ``fgn_ccvf(h, j, k)`` is Cov(b_j(n+h), b_k(n)) for h >= 0, i.e. the
  first index rides the later time point.  Negative lags are derived via
  gamma_jk(-h) = gamma_kj(h), never stored.
* The zero-argument convention: w_jk(0)*|0|^s = 0 (the power term vanishes
  first; sign(0) = 0 suppresses both the eta term and the log).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma as _gamma

from .errors import DomainError, SingularParameter
from .params import HSUM_TOL, ProcessParams, Variant

__all__ = [
    "CrossStructure",
    "normalization_constant",
    "cross_params",
    "w_func",
    "fbm_ccvf",
    "fgn_ccvf",
    "fgn_ccvf_series",
]


def normalization_constant(H, variant, *, allow_half_wb=False):
    """Variance-normalization constant of one fBm coordinate.

    For the causal variant this is a_H with

        a_H^2 = Gamma(2H+1) sin(H pi) / Gamma(H+1/2)^2,

    and for the well-balanced variant a*_H with

        a*_H^2 = 2H(1-2H) pi / [8 Gamma(2-2H) cos(H pi)
                                Gamma(H+1/2)^2 cos^2(pi(H-1/2)/2)].

    The well-balanced expression is 0/0 at H = 1/2; with
    ``allow_half_wb`` the analytic limit of (1-2H)/cos(H pi) -> 2/pi is
    substituted, otherwise :class:`SingularParameter` is raised.
    """
    if not (0.0 < H < 1.0):
        raise DomainError(f"H={H} must lie in (0, 1)")
    variant = Variant.parse(variant) if not isinstance(variant, Variant) else variant
    if variant is Variant.CAUSAL:
        a2 = _gamma(2 * H + 1) * math.sin(H * math.pi) / _gamma(H + 0.5) ** 2
    else:
        if H == 0.5:
            if not allow_half_wb:
                raise SingularParameter(
                    "well-balanced normalization is 0/0 at H = 1/2; "
                    "pass allow_half_wb=True to use the analytic limit"
                )
            ratio = 2.0 / math.pi  # lim (1-2H)/cos(H pi) as H -> 1/2
        else:
            ratio = (1.0 - 2.0 * H) / math.cos(H * math.pi)
        a2 = (
            2.0 * H * math.pi * ratio
            / (8.0 * _gamma(2.0 - 2.0 * H) * _gamma(H + 0.5) ** 2
               * math.cos(math.pi * (H - 0.5) / 2.0) ** 2)
        )
    if a2 <= 0.0:
        raise DomainError(f"non-positive squared normalization constant at H={H}")
    return math.sqrt(a2)


@dataclass(frozen=True)
class CrossStructure:
    """Derived coefficient matrices of the bivariate covariance.

    ``rho_mat`` has unit diagonal and rho_12 = rho_21.  ``eta_mat`` is
    identically zero for the well-balanced variant; for the causal one
    its diagonal is zero and eta_12 = -eta_21.  ``norm_consts`` holds the
    per-coordinate variance-normalization constants.
    """

    rho_mat: np.ndarray
    eta_mat: np.ndarray
    norm_consts: tuple

    def __post_init__(self):
        object.__setattr__(self, "rho_mat", np.asarray(self.rho_mat, dtype=float))
        object.__setattr__(self, "eta_mat", np.asarray(self.eta_mat, dtype=float))
        self.rho_mat.setflags(write=False)
        self.eta_mat.setflags(write=False)


def _cross_factor(p):
    """Common prefactor of rho_12 and eta_12 (without the final cosine /
    sine of the Hurst half-difference)."""
    H1, H2 = p.H1, p.H2
    num = math.sqrt(
        _gamma(2 * H1 + 1) * _gamma(2 * H2 + 1)
        * math.sin(H1 * math.pi) * math.sin(H2 * math.pi)
    )
    den = _gamma(H1 + H2 + 1) * math.cos((H1 + H2) * math.pi / 2.0)
    return p.rho * num / den


def cross_params(p: ProcessParams) -> CrossStructure:
    """Cross-correlation and asymmetry coefficients for given parameters.

    Raises :class:`SingularParameter` when rho != 0 and H1 + H2 = 1
    (vanishing cosine denominator; no closed form is available).
    """
    H1, H2 = p.H1, p.H2
    if p.rho == 0.0:
        rho12 = 0.0
        eta12 = 0.0
    else:
        if abs(H1 + H2 - 1.0) <= HSUM_TOL:
            raise SingularParameter("cross coefficients undefined at H1 + H2 = 1")
        base = _cross_factor(p)
        rho12 = base * math.cos((H2 - H1) * math.pi / 2.0)
        eta12 = base * math.sin((H2 - H1) * math.pi / 2.0)
    rho_mat = np.array([[1.0, rho12], [rho12, 1.0]])
    if p.variant is Variant.CAUSAL:
        eta_mat = np.array([[0.0, eta12], [-eta12, 0.0]])
    else:
        eta_mat = np.zeros((2, 2))
    consts = tuple(
        normalization_constant(H, p.variant, allow_half_wb=p.allow_half_wb)
        for H in (H1, H2)
    )
    return CrossStructure(rho_mat, eta_mat, consts)


def w_func(u, j, k, cs: CrossStructure, Hsum):
    """Sign-dependent covariance weight w_jk(u).

    Returns rho_jk - eta_jk*sign(u) when H_j + H_k != 1 and
    rho_jk - eta_jk*sign(u)*log|u| when H_j + H_k = 1.  At u = 0 the eta
    term is 0 (sign(0) = 0 takes precedence over log|0|).
    """
    rho_jk = cs.rho_mat[j - 1, k - 1]
    eta_jk = cs.eta_mat[j - 1, k - 1]
    u = np.asarray(u, dtype=float)
    sgn = np.sign(u)
    if abs(Hsum - 1.0) <= HSUM_TOL:
        with np.errstate(divide="ignore"):
            logabs = np.where(u == 0.0, 0.0, np.log(np.abs(np.where(u == 0.0, 1.0, u))))
        out = rho_jk - eta_jk * sgn * logabs
    else:
        out = rho_jk - eta_jk * sgn
    return out if out.ndim else float(out)


def _w_pow(u, rho_jk, eta_jk, s, log_branch):
    """w_jk(u) * |u|^s, vectorized, with the zero-argument convention."""
    u = np.asarray(u, dtype=float)
    au = np.abs(u)
    sgn = np.sign(u)
    if log_branch:
        safe = np.where(au == 0.0, 1.0, au)
        w = rho_jk - eta_jk * sgn * np.log(safe)
    else:
        w = rho_jk - eta_jk * sgn
    return np.where(au == 0.0, 0.0, w * au ** s)


def _coeffs(p, j, k):
    cs = cross_params(p)
    rho_jk = cs.rho_mat[j - 1, k - 1]
    eta_jk = cs.eta_mat[j - 1, k - 1]
    s = p.hurst[j - 1] + p.hurst[k - 1]
    return rho_jk, eta_jk, s, abs(s - 1.0) <= HSUM_TOL


def fbm_ccvf(s, t, j, k, p: ProcessParams):
    """Cross-covariance Cov(Z_j(t), Z_k(s)) of bivariate fBm, s, t >= 0.

    Evaluates (sigma_j sigma_k / 2) * (w_jk(t)|t|^S + w_jk(-s)|s|^S
    - w_jk(t-s)|t-s|^S) with S = H_j + H_k.
    """
    s_arr = np.asarray(s, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if np.any(s_arr < 0) or np.any(t_arr < 0):
        raise DomainError("fbm_ccvf requires s, t >= 0")
    rho_jk, eta_jk, S, logb = _coeffs(p, j, k)
    sig = p.sigma[j - 1] * p.sigma[k - 1]
    out = 0.5 * sig * (
        _w_pow(t_arr, rho_jk, eta_jk, S, logb)
        + _w_pow(-s_arr, rho_jk, eta_jk, S, logb)
        - _w_pow(t_arr - s_arr, rho_jk, eta_jk, S, logb)
    )
    return out if out.ndim else float(out)


def fgn_ccvf(h, j, k, p: ProcessParams):
    """Stationary covariance gamma^1_jk(h) = Cov(b_j(n+h), b_k(n)) of
    bivariate fGn, for any integer lag h (scalar or array).

    For h >= 0 this is the closed form

        (sigma_j sigma_k / 2) [w_jk(h+1)|h+1|^S + w_jk(h-1)|h-1|^S
                               - 2 w_jk(h)|h|^S],

    and negative lags are obtained from gamma_jk(-h) = gamma_kj(h).
    """
    h_arr = np.asarray(h)
    scalar = h_arr.ndim == 0
    h_arr = np.atleast_1d(h_arr).astype(float)
    out = np.empty_like(h_arr)
    pos = h_arr >= 0
    if np.any(pos):
        out[pos] = _fgn_ccvf_nonneg(h_arr[pos], j, k, p)
    if np.any(~pos):
        out[~pos] = _fgn_ccvf_nonneg(-h_arr[~pos], k, j, p)
    return float(out[0]) if scalar else out


def _fgn_ccvf_nonneg(h, j, k, p):
    rho_jk, eta_jk, S, logb = _coeffs(p, j, k)
    sig = p.sigma[j - 1] * p.sigma[k - 1]
    return 0.5 * sig * (
        _w_pow(h + 1.0, rho_jk, eta_jk, S, logb)
        + _w_pow(h - 1.0, rho_jk, eta_jk, S, logb)
        - 2.0 * _w_pow(h, rho_jk, eta_jk, S, logb)
    )


def fgn_ccvf_series(h_max, j, k, p: ProcessParams):
    """gamma^1_jk(h) for h = 0..h_max as an array."""
    return fgn_ccvf(np.arange(h_max + 1), j, k, p)
