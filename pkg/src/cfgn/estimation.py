"""Ensemble (Monte Carlo) estimators and theory-vs-empirical comparison.

All estimators are linear reductions of per-replication statistics, so
the ensemble mean is the estimate and the replication spread divided by
sqrt(M) is its standard error.  Complex quantities carry componentwise
(real/imaginary) standard errors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import GridOverrun, LengthMismatch, PeriodMismatch
from .cyclic import _alpha_kind  # shared cyclic-frequency classification
from .sampler import Ensemble

__all__ = [
    "empirical_acvf",
    "empirical_caf",
    "empirical_caf_series",
    "empirical_cyclic_spectrum",
    "snap_window",
    "ComparisonReport",
    "compare",
]


def empirical_acvf(e: Ensemble, n, h_max):
    """Ensemble estimate of Cov(Y(n+h), Y(n)) for h = 0..h_max.

    Returns (lags, values, std_errors).  The estimator at lag h is the
    replication mean of Y_r(n+h) Y_r(n); the process is zero-mean, so no
    mean subtraction is applied.
    """
    n = int(n)
    h_max = int(h_max)
    if n + h_max >= e.n_points:
        raise GridOverrun(f"n + h_max = {n + h_max} reaches past path length {e.n_points}")
    if e.n_reps < 2:
        raise ValueError("need at least 2 replications for a standard error")
    lags = np.arange(h_max + 1)
    prod = e.paths[:, n + lags] * e.paths[:, [n]]
    return lags, prod.mean(axis=0), prod.std(axis=0, ddof=1) / math.sqrt(e.n_reps)


def _window_period(e, alpha):
    """Fundamental integer period of the modulation, required for exact
    cyclic Fourier-coefficient extraction at alpha != 0."""
    T = e.params.modulation_period()
    if T is None:
        raise PeriodMismatch(
            "lambda0 is not a rational multiple of pi with integer period; "
            "cyclic-coefficient estimation needs an exactly periodic modulation"
        )
    return T


def snap_window(e: Ensemble, h_max, alpha=None):
    """Largest usable averaging window: a multiple of the modulation
    period when alpha != 0, otherwise everything the paths can reach."""
    avail = e.n_points - int(h_max)
    if avail < 1:
        raise GridOverrun("h_max leaves no usable window")
    if alpha is None or _alpha_kind(alpha, e.params) == 0:
        return avail
    T = _window_period(e, alpha)
    N = (avail // T) * T
    if N < T:
        raise PeriodMismatch(f"paths too short for one modulation period ({T})")
    return N


def _per_rep_caf(e, alpha, lags, N_window):
    """Per-replication cyclic coefficients, shape (M, len(lags))."""
    kind = _alpha_kind(alpha, e.params)
    N_window = int(N_window)
    lags = np.asarray(lags, dtype=int)
    if N_window - 1 + lags.max() >= e.n_points:
        raise GridOverrun("N_window + h reaches past path length")
    if kind != 0:
        T = _window_period(e, alpha)
        if N_window % T != 0:
            raise PeriodMismatch(
                f"N_window={N_window} is not a multiple of the modulation period {T}"
            )
    ns = np.arange(N_window)
    phase = np.exp(-1j * alpha * ns) / N_window
    # stat[r, i] = (1/N) sum_n Y_r(n + h_i) Y_r(n) e^{-i alpha n}
    out = np.empty((e.n_reps, lags.size), dtype=complex)
    for i, h in enumerate(lags):
        out[:, i] = (e.paths[:, ns + h] * e.paths[:, ns]) @ phase
    return out


def empirical_caf(e: Ensemble, alpha, h, N_window):
    """Ensemble estimate of the cyclic coefficient R^alpha(h).

    Returns (value, se) with componentwise complex standard error
    se = se_re + 1j * se_im.
    """
    stats = _per_rep_caf(e, alpha, np.array([int(h)]), N_window)[:, 0]
    M = e.n_reps
    se = (stats.real.std(ddof=1) + 1j * stats.imag.std(ddof=1)) / math.sqrt(M)
    return complex(stats.mean()), se


def empirical_caf_series(e: Ensemble, alpha, h_max, N_window):
    """Vectorized :func:`empirical_caf` over h = 0..h_max.

    Returns (lags, values, ses)."""
    lags = np.arange(int(h_max) + 1)
    stats = _per_rep_caf(e, alpha, lags, N_window)
    M = e.n_reps
    ses = (stats.real.std(axis=0, ddof=1)
           + 1j * stats.imag.std(axis=0, ddof=1)) / math.sqrt(M)
    return lags, stats.mean(axis=0), ses


def empirical_cyclic_spectrum(e: Ensemble, alpha, freqs, h_max,
                              window="none", N_window=None):
    """Truncated-lag estimate of the cyclic spectrum on a frequency grid.

    Per replication, cyclic coefficients R_r^alpha(h) for h = 0..h_max
    are extended to negative lags via R^alpha(-h) = e^{-i alpha h}
    R^alpha(h) and summed as S_r(lambda) = sum_{|h| <= h_max} w(h)
    R_r(h) e^{-i lambda h}; ``window`` selects w identically 1 ("none")
    or a Bartlett taper.  Returns (values, ses) aligned with ``freqs``.
    """
    freqs = np.asarray(freqs, dtype=float)
    h_max = int(h_max)
    if N_window is None:
        N_window = snap_window(e, h_max, alpha)
    lags = np.arange(h_max + 1)
    stats = _per_rep_caf(e, alpha, lags, N_window)  # (M, h_max+1)

    if window in (None, "none", "None"):
        w = np.ones(h_max + 1)
    elif str(window).lower() == "bartlett":
        w = 1.0 - lags / (h_max + 1.0)
    else:
        raise ValueError(f"unknown lag window {window!r}")

    # full lag axis -h_max..h_max with the negative-lag phase extension
    full_h = np.concatenate([-lags[:0:-1], lags])
    refl = np.exp(-1j * alpha * lags[1:]) * w[1:]
    coeff = np.concatenate([(stats[:, 1:] * refl)[:, ::-1], stats * w], axis=1)
    basis = np.exp(-1j * np.outer(full_h, freqs))
    per_rep = coeff @ basis  # (M, len(freqs))
    M = e.n_reps
    ses = (per_rep.real.std(axis=0, ddof=1)
           + 1j * per_rep.imag.std(axis=0, ddof=1)) / math.sqrt(M)
    return per_rep.mean(axis=0), ses


@dataclass
class ComparisonReport:
    """Pointwise theory-vs-ensemble comparison on a shared grid.

    For complex data the error is measured componentwise against the
    componentwise standard errors; ``max_se_ratio`` is the largest
    |error| / SE over all points and components.
    """

    statistic_name: str
    grid: np.ndarray
    theoretical: np.ndarray
    empirical: np.ndarray
    std_error: np.ndarray
    se_multiplier: float = 4.0
    max_abs_err: float = field(init=False)
    max_se_ratio: float = field(init=False)
    worst_index: int = field(init=False)
    passed: bool = field(init=False)

    def __post_init__(self):
        g = np.asarray(self.grid)
        th = np.asarray(self.theoretical)
        emp = np.asarray(self.empirical)
        se = np.asarray(self.std_error)
        if not (g.shape == th.shape == emp.shape == se.shape):
            raise LengthMismatch("comparison grids are not aligned")
        err = emp - th
        re_ratio = np.abs(err.real) / np.maximum(np.abs(np.real(se)), 1e-300)
        ratios = re_ratio
        if np.iscomplexobj(th) or np.iscomplexobj(emp):
            im_ratio = np.abs(err.imag) / np.maximum(np.abs(np.imag(se)), 1e-300)
            ratios = np.maximum(re_ratio, im_ratio)
        self.grid, self.theoretical, self.empirical, self.std_error = g, th, emp, se
        self.max_abs_err = float(np.max(np.abs(err)))
        self.max_se_ratio = float(np.max(ratios))
        self.worst_index = int(np.argmax(ratios))
        self.passed = bool(self.max_se_ratio <= self.se_multiplier)

    def to_csv(self, path, header_lines=()):
        path = Path(path)
        th = np.asarray(self.theoretical, dtype=complex)
        emp = np.asarray(self.empirical, dtype=complex)
        se = np.asarray(self.std_error, dtype=complex)
        se_mag = np.maximum(np.abs(se.real), np.abs(se.imag))
        ratio = np.empty(len(th))
        for i in range(len(th)):
            rr = abs(emp[i].real - th[i].real) / max(abs(se[i].real), 1e-300)
            ri = abs(emp[i].imag - th[i].imag) / max(abs(se[i].imag), 1e-300) \
                if se[i].imag != 0 else 0.0
            ratio[i] = max(rr, ri)
        with path.open("w", newline="") as fh:
            for line in header_lines:
                fh.write(f"# {line}\n")
            fh.write("grid,theory_re,theory_im,emp_re,emp_im,se,se_ratio\n")
            for i, g in enumerate(np.asarray(self.grid)):
                fh.write(f"{g:.17g},{th[i].real:.17g},{th[i].imag:.17g},"
                         f"{emp[i].real:.17g},{emp[i].imag:.17g},"
                         f"{se_mag[i]:.17g},{ratio[i]:.17g}\n")

    def summary(self):
        return {
            "statistic": self.statistic_name,
            "points": int(np.asarray(self.grid).size),
            "max_abs_err": self.max_abs_err,
            "max_se_ratio": self.max_se_ratio,
            "worst_index": self.worst_index,
            "se_multiplier": self.se_multiplier,
            "passed": self.passed,
        }

    def to_json(self, path):
        Path(path).write_text(json.dumps(self.summary(), indent=2) + "\n")


def compare(theory, empirical, se, name="statistic", grid=None,
            se_multiplier=4.0) -> ComparisonReport:
    """Bundle aligned theory/empirical/SE sequences into a report."""
    theory = np.asarray(theory)
    if grid is None:
        grid = np.arange(theory.size)
    return ComparisonReport(name, np.asarray(grid), theory,
                            np.asarray(empirical), np.asarray(se),
                            se_multiplier)
