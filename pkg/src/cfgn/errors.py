"""Exception hierarchy for the cfgn package."""


class CfgnError(Exception):
    """Base class for all cfgn-specific errors."""


class DomainError(CfgnError):
    """A parameter lies outside its mathematical domain."""


class SingularParameter(CfgnError):
    """A parameter combination hits a removable or genuine singularity
    of the closed-form coefficients (e.g. H1 + H2 = 1 with rho != 0)."""


class SingularFrequency(CfgnError):
    """Spectral evaluation requested exactly at a non-integrable
    singularity of the spectral density."""


class NonConvergence(CfgnError):
    """An adaptive series truncation failed to meet its tolerance within
    the configured maximum number of terms."""


class FactorizationFailure(CfgnError):
    """Cholesky factorization failed even after jitter escalation."""


class LengthMismatch(CfgnError):
    """Sequences that must be aligned have different lengths."""


class GridOverrun(CfgnError):
    """A requested (n, h) combination reaches past the simulated path."""


class PeriodMismatch(CfgnError):
    """An averaging window is not an integer multiple of the modulation
    period, so exact Fourier-coefficient extraction is impossible."""


class UnknownCyclicFrequency(CfgnError):
    """A cyclic frequency outside {0, +2*lambda0, -2*lambda0} was given."""
