"""Parameter containers for 2d fGn and cyclic fractional Gaussian noise.

The bivariate process is parameterized by a Hurst pair (H1, H2), marginal
scales (sigma1, sigma2), the driving-noise correlation rho, and the model
variant (causal or well-balanced).  The cyclic process adds a modulation
frequency lambda0 and amplitudes (a1, a2).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError, SingularParameter

#: Tolerance used when testing H1 + H2 == 1 (the cross-correlation
#: coefficient has a cos((H1+H2)*pi/2) denominator that vanishes there).
HSUM_TOL = 1e-12


class Variant(enum.Enum):
    """Choice of bivariate fBm construction."""

    CAUSAL = "causal"
    WELL_BALANCED = "wellbalanced"

    @classmethod
    def parse(cls, name):
        key = str(name).strip().lower().replace("-", "").replace("_", "")
        for v in cls:
            if v.value == key:
                return v
        raise DomainError(f"unknown variant {name!r}; expected 'causal' or 'wellbalanced'")


@dataclass(frozen=True)
class ProcessParams:
    """Full parameterization of a bivariate fGn.

    Parameters
    ----------
    H1, H2 : float
        Hurst exponents, each in (0, 1).
    sigma1, sigma2 : float
        Marginal scales (standard deviation of each coordinate at unit
        time), strictly positive.
    rho : float
        Correlation of the two driving Brownian motions, in [-1, 1].
    variant : Variant
        Causal or well-balanced construction.
    allow_half_wb : bool
        Permit H = 1/2 for the well-balanced variant, evaluating the
        normalization constant by its analytic limit.  Off by default.
    """

    H1: float
    H2: float
    sigma1: float = 1.0
    sigma2: float = 1.0
    rho: float = 0.0
    variant: Variant = Variant.CAUSAL
    allow_half_wb: bool = False

    def __post_init__(self):
        for name in ("H1", "H2"):
            H = getattr(self, name)
            if not (0.0 < H < 1.0):
                raise DomainError(f"{name}={H} must lie in (0, 1)")
        for name in ("sigma1", "sigma2"):
            s = getattr(self, name)
            if not (s > 0.0 and math.isfinite(s)):
                raise DomainError(f"{name}={s} must be strictly positive")
        if not (-1.0 <= self.rho <= 1.0):
            raise DomainError(f"rho={self.rho} must lie in [-1, 1]")
        if not isinstance(self.variant, Variant):
            object.__setattr__(self, "variant", Variant.parse(self.variant))
        if self.rho != 0.0 and abs(self.H1 + self.H2 - 1.0) <= HSUM_TOL:
            raise SingularParameter(
                "H1 + H2 = 1 with rho != 0: the cross-correlation "
                "coefficient is undefined (vanishing cosine denominator)"
            )
        if (
            self.variant is Variant.WELL_BALANCED
            and not self.allow_half_wb
            and (self.H1 == 0.5 or self.H2 == 0.5)
        ):
            raise SingularParameter(
                "H = 1/2 for the well-balanced variant requires "
                "allow_half_wb=True (0/0 normalization, limit evaluation)"
            )

    @property
    def hurst(self):
        return (self.H1, self.H2)

    @property
    def sigma(self):
        return (self.sigma1, self.sigma2)


@dataclass(frozen=True)
class CfgnParams:
    """Parameters of the cyclic process Y(n) = a1 cos(lambda0 n) b1(n)
    + a2 sin(lambda0 n) b2(n) driven by a bivariate fGn (b1, b2)."""

    base: ProcessParams
    lambda0: float = 0.1 * math.pi
    a1: float = 1.0
    a2: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.lambda0 < math.pi):
            raise DomainError(f"lambda0={self.lambda0} must lie in (0, pi)")
        if not (math.isfinite(self.a1) and math.isfinite(self.a2)):
            raise DomainError("amplitudes a1, a2 must be finite")

    def modulation_period(self):
        """Fundamental period of n -> cos(2*lambda0*n), i.e. pi/lambda0,
        when it is (numerically) an integer; None for aperiodic-in-n
        (almost-cyclostationary) modulation."""
        T = math.pi / self.lambda0
        if abs(T - round(T)) < 1e-9:
            return int(round(T))
        return None
