"""
Cyclic spectra and their near-resonance behavior
================================================

Left: the cyclic spectrum at frequency zero and at twice the modulation
frequency, theory versus a truncated-lag ensemble estimate.  Right: the
power-law divergence of |S| near the modulation frequency against its
closed-form asymptote.
"""

import matplotlib.pyplot as plt
import numpy as np

from cfgn import (
    CfgnParams,
    ProcessParams,
    Variant,
    cyclic_spectrum,
    cyclic_spectrum_asymptote,
    empirical_cyclic_spectrum,
    make_ensemble,
    snap_window,
)

params = CfgnParams(
    base=ProcessParams(H1=0.4, H2=0.7, rho=0.15, variant=Variant.CAUSAL)
)
lam0 = params.lambda0
ens = make_ensemble(params, n=256, M=10_000, seed=13)

fig, axes = plt.subplots(1, 3, figsize=(12, 3.5))

# --- spectra on a frequency grid away from the modulation poles
freqs = np.linspace(0.05, 3.0, 120)
keep = np.abs(freqs - lam0) > 0.2
freqs = freqs[keep]
h_max = 128
N = snap_window(ens, h_max, 2 * lam0)

for ax, alpha, title in ((axes[0], 0.0, "cyclic spectrum, frequency 0"),
                         (axes[1], 2 * lam0, "cyclic spectrum at 2*lambda0")):
    emp, se = empirical_cyclic_spectrum(ens, alpha, freqs, h_max, N_window=N)
    theo = np.array([cyclic_spectrum(alpha, l, params) for l in freqs])
    ax.plot(freqs, emp.real, ".", ms=3, label="ensemble")
    ax.plot(freqs, theo.real, "k-", lw=1, label="theory")
    ax.set_title(title + " (real part)")
    ax.set_xlabel("lambda")
    ax.legend(fontsize=8)

# --- approach to the |lambda - lambda0|^{-2 d_max} pole
cfg = CfgnParams(base=ProcessParams(H1=0.85, H2=0.4, rho=0.15))
deltas = np.geomspace(0.005, 0.5, 60)
exact = np.abs([cyclic_spectrum(2 * cfg.lambda0, cfg.lambda0 + d, cfg)
                for d in deltas])
approx = np.abs(cyclic_spectrum_asymptote(cfg.lambda0 + deltas, cfg))
axes[2].loglog(deltas, exact, "k-", lw=1, label="exact |S|")
axes[2].loglog(deltas, approx, "o", ms=3, label="asymptote")
axes[2].set_title("near-resonance divergence, H = (0.85, 0.4)")
axes[2].set_xlabel("|lambda - lambda0|")
axes[2].legend(fontsize=8)

fig.tight_layout()
fig.savefig("spectra_demo.svg")
print("wrote spectra_demo.svg")
