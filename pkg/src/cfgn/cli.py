"""Reproducible experiment front-end.

Subcommands
-----------
simulate   emit a seeded ensemble as columnar CSV (+ binary cache)
theory     tables of theoretical ACVF / CAF / cyclic spectra / asymptotes
estimate   ensemble estimates of the same statistics, with standard errors
compare    theory-vs-ensemble reports (CSV + JSON pass/fail)
figures    the full comparison grid (rho in {-0.15, 0, 0.15}, both
           variants) as CSV tables and SVG line plots

Exit codes: 0 success, 2 configuration error, 3 numerical error.  Errors
are also written to stderr as a single JSON object.
"""

from __future__ import annotations

import json
import math
import sys
from functools import wraps
from pathlib import Path

import click
import numpy as np

from . import __version__
from .config import ExperimentConfig, dump_config, load_config
from .cyclic import (
    acvf,
    acvf_asymptote,
    asymptote_coeffs,
    caf,
    cyclic_spectrum,
    cyclic_spectrum_asymptote,
)
from .errors import CfgnError, DomainError
from .estimation import (
    compare as make_report,
    empirical_acvf,
    empirical_caf_series,
    empirical_cyclic_spectrum,
    snap_window,
)
from .plotting import line_plot
from .sampler import make_ensemble
from .spectral import fgn_spectral_density_grid

RHO_GRID = (-0.15, 0.0, 0.15)
VARIANTS = ("causal", "wellbalanced")
ASYMPTOTE_HURST = ((0.85, 0.4), (0.4, 0.85), (0.75, 0.75))


def _fail(code, exc):
    payload = {"error": type(exc).__name__, "message": str(exc)}
    click.echo(json.dumps(payload), err=True)
    sys.exit(code)


def _with_config(fn):
    """Load + override the config, route errors to exit codes 2/3."""

    @click.option("--config", "config_path", type=click.Path(), default=None,
                  help="TOML experiment configuration.")
    @click.option("--seed", type=int, default=None, help="Override RNG seed.")
    @click.option("--out", "out_dir", type=click.Path(), default=None,
                  help="Override output directory.")
    @click.option("--reps", "M", type=int, default=None,
                  help="Override Monte Carlo replication count.")
    @click.option("--variant", type=click.Choice(["causal", "wellbalanced"]),
                  default=None, help="Override the model variant.")
    @click.option("--tol", "rel_tol", type=float, default=None,
                  help="Relative tolerance of spectral sums.")
    @wraps(fn)
    def wrapper(config_path, seed, out_dir, M, variant, rel_tol, **kwargs):
        try:
            cfg = load_config(config_path) if config_path else ExperimentConfig()
            if seed is not None:
                cfg.seed = seed
            if out_dir is not None:
                cfg.out_dir = out_dir
            if M is not None:
                cfg.M = M
            if variant is not None:
                cfg.variant = variant
            if rel_tol is not None:
                cfg.rel_tol = rel_tol
            cfg.validate()
        except (OSError, DomainError, CfgnError, ValueError) as exc:
            _fail(2, exc)
        try:
            fn(cfg, **kwargs)
        except CfgnError as exc:
            _fail(3, exc)
        except np.linalg.LinAlgError as exc:
            _fail(3, exc)

    return wrapper


@click.group()
@click.version_option(version=__version__)
def main():
    """Cyclic fractional Gaussian noise: simulation, theory, validation."""


def _header(cfg):
    return (f"config_hash={cfg.config_hash()}",
            f"seed={cfg.seed}",
            f"tool_version={__version__}")


def _outdir(cfg):
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write_csv(path, cfg, columns, rows):
    with Path(path).open("w", newline="") as fh:
        for line in _header(cfg):
            fh.write(f"# {line}\n")
        fh.write(",".join(columns) + "\n")
        for row in rows:
            fh.write(",".join(f"{v:.17g}" if isinstance(v, float) else str(v)
                              for v in row) + "\n")


def _freq_grid(cfg):
    # equispaced on (0, pi]
    k = np.arange(1, cfg.freq_points + 1)
    return k * math.pi / cfg.freq_points


@main.command()
@_with_config
def simulate(cfg):
    """Simulate a seeded ensemble and write it as CSV."""
    out = _outdir(cfg)
    ens = make_ensemble(cfg.cfgn_params(), cfg.n_points, cfg.M, cfg.seed,
                        cache_dir=out / "cache")
    dest = out / "ensemble.csv"
    ens.to_csv(dest, header_lines=_header(cfg))
    click.echo(f"wrote {dest} ({ens.n_reps} x {ens.n_points})")


@main.command()
@_with_config
def theory(cfg):
    """Write theoretical statistic tables."""
    out = _outdir(cfg)
    cp = cfg.cfgn_params()
    lags = np.arange(cfg.h_max + 1)

    if "acvf" in cfg.statistics:
        vals = acvf(cfg.n_reference, lags, cp)
        _write_csv(out / "acvf_theory.csv", cfg,
                   ["h", "gamma_theory", "stationary", "cyclic"],
                   zip(lags.tolist(), vals.total, vals.stationary, vals.cyclic))
    if "caf" in cfg.statistics:
        for alpha, tag in ((0.0, "0"), (2 * cp.lambda0, "2lambda0")):
            r = np.atleast_1d(caf(alpha, lags, cp))
            _write_csv(out / f"caf_theory_alpha{tag}.csv", cfg,
                       ["h", "re", "im"],
                       zip(lags.tolist(), r.real, r.imag))
    if "spectrum" in cfg.statistics:
        freqs = _freq_grid(cfg)
        keep = np.abs(np.abs(freqs) - cp.lambda0) > 1e-6
        freqs = freqs[keep]
        for alpha, tag in ((0.0, "0"), (2 * cp.lambda0, "2lambda0")):
            s = np.array([cyclic_spectrum(alpha, lam, cp, cfg.rel_tol)
                          for lam in freqs])
            _write_csv(out / f"spectrum_theory_alpha{tag}.csv", cfg,
                       ["lambda", "re", "im"],
                       zip(freqs, s.real, s.imag))
    if "asymptote" in cfg.statistics:
        co = asymptote_coeffs(cp)
        hs = np.unique(np.round(np.logspace(1, 3, 120))).astype(int)
        a = acvf_asymptote(cfg.n_reference, hs, cp, co)
        exact = acvf(cfg.n_reference, hs, cp).total
        _write_csv(out / "acvf_asymptote.csv", cfg,
                   ["h", "acvf", "asymptote"],
                   zip(hs.tolist(), exact, a))
        d = np.geomspace(0.005, 0.5, 80)
        sv = np.array([cyclic_spectrum(2 * cp.lambda0, cp.lambda0 + x, cp,
                                       cfg.rel_tol) for x in d])
        sa = cyclic_spectrum_asymptote(cp.lambda0 + d, cp, co)
        _write_csv(out / "spectrum_asymptote.csv", cfg,
                   ["delta", "abs_spectrum", "abs_asymptote"],
                   zip(d, np.abs(sv), np.abs(sa)))
    click.echo(f"theory tables written to {out}")


def _spectrum_setup(cfg, ens):
    """Lag depth and window for the spectrum estimator on this ensemble."""
    cp = ens.params
    T = cp.modulation_period() or 1
    h_max = min(cfg.spectrum_h_max, ens.n_points - T - 1)
    return h_max, snap_window(ens, h_max, 2 * cp.lambda0)


@main.command()
@_with_config
def estimate(cfg):
    """Write ensemble-estimate tables with standard errors."""
    out = _outdir(cfg)
    cp = cfg.cfgn_params()
    ens = make_ensemble(cp, cfg.n_points, cfg.M, cfg.seed,
                        cache_dir=out / "cache")
    if "acvf" in cfg.statistics:
        lags, vals, ses = empirical_acvf(ens, cfg.n_reference, cfg.h_max)
        _write_csv(out / "acvf_empirical.csv", cfg, ["h", "estimate", "se"],
                   zip(lags.tolist(), vals, ses))
    if "caf" in cfg.statistics:
        N = snap_window(ens, cfg.h_max, 2 * cp.lambda0)
        for alpha, tag in ((0.0, "0"), (2 * cp.lambda0, "2lambda0")):
            lags, vals, ses = empirical_caf_series(ens, alpha, cfg.h_max, N)
            _write_csv(out / f"caf_empirical_alpha{tag}.csv", cfg,
                       ["h", "re", "im", "se_re", "se_im"],
                       zip(lags.tolist(), vals.real, vals.imag,
                           ses.real, ses.imag))
    if "spectrum" in cfg.statistics:
        h_max, N = _spectrum_setup(cfg, ens)
        freqs = _freq_grid(cfg)
        for alpha, tag in ((0.0, "0"), (2 * cp.lambda0, "2lambda0")):
            vals, ses = empirical_cyclic_spectrum(ens, alpha, freqs, h_max,
                                                  N_window=N)
            _write_csv(out / f"spectrum_empirical_alpha{tag}.csv", cfg,
                       ["lambda", "re", "im", "se_re", "se_im"],
                       zip(freqs, vals.real, vals.imag, ses.real, ses.imag))
    click.echo(f"estimate tables written to {out}")


def _cell_reports(cfg, cp, ens, freq_count=64):
    """ComparisonReports for one (rho, variant) cell."""
    reports = {}
    lags, vals, ses = empirical_acvf(ens, cfg.n_reference, cfg.h_max)
    th = acvf(cfg.n_reference, lags, cp).total
    reports["acvf"] = make_report(th, vals, ses, "acvf", lags,
                                  cfg.se_multiplier)

    N = snap_window(ens, cfg.h_max, 2 * cp.lambda0)
    for alpha, tag in ((0.0, "caf0"), (2 * cp.lambda0, "caf2lambda0")):
        lags, vals, ses = empirical_caf_series(ens, alpha, cfg.h_max, N)
        th = np.atleast_1d(caf(alpha, lags, cp))
        reports[tag] = make_report(th, vals, ses, tag, lags,
                                   cfg.se_multiplier)

    h_max, N = _spectrum_setup(cfg, ens)
    base = _freq_grid(cfg)
    keep = (np.abs(base - cp.lambda0) > 0.2) & (np.abs(base + cp.lambda0) > 0.2)
    freqs = base[keep][:: max(1, keep.sum() // freq_count)]
    for alpha, tag in ((0.0, "spectrum0"), (2 * cp.lambda0, "spectrum2lambda0")):
        vals, ses = empirical_cyclic_spectrum(ens, alpha, freqs, h_max,
                                              N_window=N)
        th = np.array([cyclic_spectrum(alpha, lam, cp, cfg.rel_tol)
                       for lam in freqs])
        reports[tag] = make_report(th, vals, ses, tag, freqs,
                                   cfg.se_multiplier)
    return reports


@main.command(name="compare")
@_with_config
def compare_cmd(cfg):
    """Theory-vs-ensemble comparison for the configured cell."""
    out = _outdir(cfg)
    cp = cfg.cfgn_params()
    ens = make_ensemble(cp, cfg.n_points, cfg.M, cfg.seed,
                        cache_dir=out / "cache")
    summary = {}
    for name, report in _cell_reports(cfg, cp, ens).items():
        report.to_csv(out / f"compare_{name}.csv", header_lines=_header(cfg))
        summary[name] = report.summary()
    ok = all(s["passed"] for s in summary.values())
    (out / "compare_summary.json").write_text(
        json.dumps({"passed": ok, "statistics": summary}, indent=2) + "\n")
    click.echo(f"comparison {'PASS' if ok else 'FAIL'}; reports in {out}")
    if not ok:
        sys.exit(1)


@main.command()
@_with_config
def figures(cfg):
    """Reproduce the full comparison grid as CSV + SVG artifacts."""
    out = _outdir(cfg)
    all_ok = True
    for variant in VARIANTS:
        for rho in RHO_GRID:
            cell = f"{variant}_rho{rho:+.2f}"
            cell_dir = out / cell
            cell_dir.mkdir(parents=True, exist_ok=True)
            cp = cfg.cfgn_params(rho=rho, variant=variant)
            ens = make_ensemble(cp, cfg.n_points, cfg.M, cfg.seed,
                                cache_dir=out / "cache")

            # family 1: example trajectories
            k = min(3, ens.n_reps)
            t = np.arange(ens.n_points)
            _write_csv(cell_dir / "trajectories.csv", cfg,
                       ["n"] + [f"path{r}" for r in range(k)],
                       zip(t.tolist(), *[ens.paths[r] for r in range(k)]))
            line_plot(cell_dir / "trajectories.svg", t,
                      [(f"path {r}", ens.paths[r], "line") for r in range(k)],
                      "n", "Y(n)", f"sample paths [{cell}]")

            reports = _cell_reports(cfg, cp, ens)
            panels = {
                "acvf": ("autocovariance at fixed n", False, "re"),
                "caf0": ("cyclic coefficient, frequency 0", False, "re"),
                "caf2lambda0_re": ("cyclic coefficient at 2*lambda0, real part", False, None),
                "caf2lambda0_im": ("cyclic coefficient at 2*lambda0, imaginary part", False, None),
                "spectrum0": ("cyclic spectrum, frequency 0", False, "re"),
                "spectrum2lambda0_re": ("cyclic spectrum at 2*lambda0, real part", False, None),
                "spectrum2lambda0_im": ("cyclic spectrum at 2*lambda0, imaginary part", False, None),
            }
            for name, report in reports.items():
                report.to_csv(cell_dir / f"compare_{name}.csv",
                              header_lines=_header(cfg))
                all_ok &= report.passed
            for panel, (title, loglog, _) in panels.items():
                base = panel.replace("_re", "").replace("_im", "")
                rep = reports[base]
                part = np.imag if panel.endswith("_im") else np.real
                line_plot(cell_dir / f"{panel}.svg", rep.grid,
                          [("theory", part(rep.theoretical), "line"),
                           ("ensemble", part(rep.empirical), "points")],
                          "h" if "caf" in panel or panel == "acvf" else "lambda",
                          panel, f"{title} [{cell}]")

    # family 8: asymptote panels over the Hurst configurations
    for H1, H2 in ASYMPTOTE_HURST:
        for variant in VARIANTS:
            for rho in RHO_GRID:
                try:
                    cp = ExperimentConfig(
                        H1=H1, H2=H2, rho=rho, variant=variant,
                        lambda0_over_pi=cfg.lambda0_over_pi,
                    ).cfgn_params()
                except CfgnError:
                    continue
                tag = f"H{H1}_{H2}_{variant}_rho{rho:+.2f}"
                co = asymptote_coeffs(cp)
                hs = np.unique(np.round(np.logspace(1, 3, 100))).astype(int)
                exact = acvf(2, hs, cp).total
                approx = acvf_asymptote(2, hs, cp, co)
                _write_csv(out / f"asymptote_acvf_{tag}.csv", cfg,
                           ["h", "acvf", "asymptote"],
                           zip(hs.tolist(), exact, approx))
                line_plot(out / f"asymptote_acvf_{tag}.svg", hs,
                          [("exact", exact, "line"),
                           ("asymptote", approx, "points")],
                          "h", "|autocovariance|",
                          f"large-lag decay [{tag}]", loglog=True)
                d = np.geomspace(0.005, 0.5, 60)
                sv = np.abs([cyclic_spectrum(2 * cp.lambda0,
                                             cp.lambda0 + x, cp, cfg.rel_tol)
                             for x in d])
                sa = np.abs(cyclic_spectrum_asymptote(cp.lambda0 + d, cp, co))
                _write_csv(out / f"asymptote_spectrum_{tag}.csv", cfg,
                           ["delta", "abs_spectrum", "abs_asymptote"],
                           zip(d, sv, sa))
                line_plot(out / f"asymptote_spectrum_{tag}.svg", d,
                          [("exact", sv, "line"), ("asymptote", sa, "points")],
                          "|lambda - lambda0|", "|S|",
                          f"near-resonance divergence [{tag}]", loglog=True)

    dump_config(cfg, out / "config_used.toml")
    click.echo(f"figure grid {'PASS' if all_ok else 'FAIL'}; artifacts in {out}")
    if not all_ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
