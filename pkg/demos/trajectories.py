"""
Simulating cyclic fractional Gaussian noise
===========================================

Draws a handful of exact sample paths and shows how the periodic
amplitude modulation shapes the pointwise variance.
"""

import matplotlib.pyplot as plt
import numpy as np

from cfgn import CfgnParams, ProcessParams, Variant, acvf, make_ensemble

# the headline parameter point: moderately rough first coordinate,
# long-memory second coordinate, weak positive driving correlation
params = CfgnParams(
    base=ProcessParams(H1=0.4, H2=0.7, rho=0.15, variant=Variant.CAUSAL)
)

ens = make_ensemble(params, n=256, M=2000, seed=7)
t = np.arange(ens.n_points)

fig, (ax0, ax1) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)
for r in range(3):
    ax0.plot(t, ens.paths[r], lw=0.8, label=f"replication {r}")
ax0.set_ylabel("Y(n)")
ax0.legend(fontsize=8)
ax0.set_title("exact sample paths")

# the variance is periodic in n with period pi / lambda0
emp_var = ens.paths.var(axis=0)
theo_var = np.array([acvf(int(n), 0, params).total for n in t])
ax1.plot(t, emp_var, lw=0.8, label="ensemble variance")
ax1.plot(t, theo_var, "k--", lw=1.0, label="theoretical variance")
ax1.set_xlabel("n")
ax1.set_ylabel("Var Y(n)")
ax1.legend(fontsize=8)

fig.tight_layout()
fig.savefig("trajectories_demo.svg")
print("wrote trajectories_demo.svg")
