"""Cyclic fractional Gaussian noise.

A discrete-time cyclically-correlated process built by amplitude
modulation of a correlated pair of fractional Gaussian noises:

    Y(n) = a1 cos(lambda0 n) b1(n) + a2 sin(lambda0 n) b2(n),

where (b1, b2) are the unit-lag increments of a bivariate fractional
Brownian motion (causal or well-balanced).  The package provides the
exact auto/cross covariances and spectral densities of the pair, the
cyclic second-order statistics of Y (time-dependent autocovariance,
cyclic coefficients, cyclic spectra, and their asymptotics), exact
seeded Gaussian simulation, and Monte Carlo estimators for validation.
"""

from .params import CfgnParams, ProcessParams, Variant
from .covariance import (
    CrossStructure,
    cross_params,
    fbm_ccvf,
    fgn_ccvf,
    fgn_ccvf_series,
    normalization_constant,
)
from .spectral import (
    SpectralConstants,
    fgn_spectral_asymptote,
    fgn_spectral_density,
    fgn_spectral_density_grid,
    spectral_constants,
    wrap_frequency,
)
from .cyclic import (
    AcvfValue,
    AsymptoteCoeffs,
    acvf,
    acvf_asymptote,
    asymptote_coeffs,
    caf,
    cyclic_frequencies,
    cyclic_spectrum,
    cyclic_spectrum_asymptote,
)
from .sampler import (
    Ensemble,
    assemble_joint_covariance,
    cfgn_path,
    cholesky_factor,
    make_ensemble,
    sample_fgn2d,
)
from .estimation import (
    ComparisonReport,
    compare,
    empirical_acvf,
    empirical_caf,
    empirical_caf_series,
    empirical_cyclic_spectrum,
    snap_window,
)
from .config import ExperimentConfig, dump_config, load_config
from .errors import (
    CfgnError,
    DomainError,
    FactorizationFailure,
    GridOverrun,
    LengthMismatch,
    NonConvergence,
    PeriodMismatch,
    SingularFrequency,
    SingularParameter,
    UnknownCyclicFrequency,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CfgnParams", "ProcessParams", "Variant",
    "CrossStructure", "cross_params", "fbm_ccvf", "fgn_ccvf",
    "fgn_ccvf_series", "normalization_constant",
    "SpectralConstants", "fgn_spectral_asymptote", "fgn_spectral_density",
    "fgn_spectral_density_grid", "spectral_constants", "wrap_frequency",
    "AcvfValue", "AsymptoteCoeffs", "acvf", "acvf_asymptote",
    "asymptote_coeffs", "caf", "cyclic_frequencies", "cyclic_spectrum",
    "cyclic_spectrum_asymptote",
    "Ensemble", "assemble_joint_covariance", "cfgn_path", "cholesky_factor",
    "make_ensemble", "sample_fgn2d",
    "ComparisonReport", "compare", "empirical_acvf", "empirical_caf",
    "empirical_caf_series", "empirical_cyclic_spectrum", "snap_window",
    "ExperimentConfig", "dump_config", "load_config",
    "CfgnError", "DomainError", "FactorizationFailure", "GridOverrun",
    "LengthMismatch", "NonConvergence", "PeriodMismatch",
    "SingularFrequency", "SingularParameter", "UnknownCyclicFrequency",
]
