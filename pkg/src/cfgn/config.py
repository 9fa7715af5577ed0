"""Experiment configuration: a diffable TOML file round-tripped losslessly.

The modulation frequency is stored as a rational multiple of pi
(``lambda0_over_pi``) so the exact periodicity needed by the cyclic
estimators survives the text round trip.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path

import tomli

from .errors import DomainError
from .params import CfgnParams, ProcessParams, Variant

__all__ = ["ExperimentConfig", "load_config", "dump_config"]

DEFAULT_STATISTICS = ("acvf", "caf", "spectrum", "asymptote")


@dataclass
class ExperimentConfig:
    """Everything one run needs: process parameters, grid sizes,
    replication count, seed, and output destinations."""

    H1: float = 0.4
    H2: float = 0.7
    sigma1: float = 1.0
    sigma2: float = 1.0
    rho: float = 0.15
    variant: str = "causal"
    lambda0_over_pi: float = 0.1
    a1: float = 1.0
    a2: float = 1.0
    n_points: int = 64
    n_reference: int = 20
    M: int = 10000
    seed: int = 20260824
    h_max: int = 20
    spectrum_h_max: int = 128
    freq_points: int = 1024
    out_dir: str = "cfgn-out"
    se_multiplier: float = 4.0
    rel_tol: float = 1e-8
    statistics: tuple = DEFAULT_STATISTICS

    def process_params(self, rho=None, variant=None) -> ProcessParams:
        return ProcessParams(
            H1=self.H1, H2=self.H2, sigma1=self.sigma1, sigma2=self.sigma2,
            rho=self.rho if rho is None else rho,
            variant=Variant.parse(variant or self.variant),
        )

    def cfgn_params(self, rho=None, variant=None) -> CfgnParams:
        return CfgnParams(
            base=self.process_params(rho, variant),
            lambda0=self.lambda0_over_pi * math.pi,
            a1=self.a1, a2=self.a2,
        )

    def to_toml(self) -> str:
        lines = ["[process]"]
        for key in ("H1", "H2", "sigma1", "sigma2", "rho"):
            lines.append(f"{key} = {getattr(self, key)!r}")
        lines.append(f'variant = "{self.variant}"')
        lines.append("")
        lines.append("[modulation]")
        lines.append(f"lambda0_over_pi = {self.lambda0_over_pi!r}")
        lines.append(f"a1 = {self.a1!r}")
        lines.append(f"a2 = {self.a2!r}")
        lines.append("")
        lines.append("[run]")
        for key in ("n_points", "n_reference", "M", "seed", "h_max",
                    "spectrum_h_max", "freq_points"):
            lines.append(f"{key} = {getattr(self, key)}")
        lines.append(f'out_dir = "{self.out_dir}"')
        lines.append(f"se_multiplier = {self.se_multiplier!r}")
        lines.append(f"rel_tol = {self.rel_tol!r}")
        stats = ", ".join(f'"{s}"' for s in self.statistics)
        lines.append(f"statistics = [{stats}]")
        return "\n".join(lines) + "\n"

    def config_hash(self) -> str:
        """Digest of the scientific configuration (output paths excluded,
        so identical experiments hash identically wherever they land)."""
        lines = [l for l in self.to_toml().splitlines()
                 if not l.startswith("out_dir")]
        return hashlib.sha256("\n".join(lines).encode()).hexdigest()[:12]

    def validate(self):
        # surface parameter problems early, as config errors
        self.cfgn_params()
        if self.n_points < 2 or self.M < 1:
            raise DomainError("n_points must be >= 2 and M >= 1")
        if self.n_reference + self.h_max >= self.n_points:
            raise DomainError("n_reference + h_max must be < n_points")
        return self


def load_config(path) -> ExperimentConfig:
    raw = tomli.loads(Path(path).read_text())
    cfg = ExperimentConfig()
    known = set(cfg.__dataclass_fields__)
    for table in ("process", "modulation", "run"):
        for key, value in raw.get(table, {}).items():
            if key not in known:
                raise DomainError(f"unknown config key {table}.{key}")
            if key == "statistics":
                value = tuple(value)
            setattr(cfg, key, value)
    return cfg.validate()


def dump_config(cfg: ExperimentConfig, path):
    Path(path).write_text(cfg.to_toml())
