"""
Observed error against the a priori bound
=========================================

For each test function we build approximants for n = 2, 4, ..., 100 under
both maps, measure the maximum error on the dyadic grid 2^-50 .. 2^50, and
plot it next to the computable bound. The fitted slope of ln(error) against
sqrt(n) is compared with the predicted rate sqrt(pi d mu).
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from sinc_expdecay import MapKind, convergence_sweep, example, rate_fit
from sinc_expdecay.testbed import EXAMPLE_IDS

n_list = list(range(2, 101, 2))
styles = {MapKind.ARCSINH: "tab:blue", MapKind.LOGISTIC_LOG: "tab:red"}

fig, axes = plt.subplots(1, 3, figsize=(14, 4), sharey=True)
for ax, ex_id in zip(axes, EXAMPLE_IDS):
    ex = example(ex_id)
    for kind in MapKind:
        reports = convergence_sweep(ex, kind, n_list)
        n = np.array([r.n for r in reports])
        err = np.array([r.observed_error for r in reports])
        bound = np.array([r.bound for r in reports])
        color = styles[kind]
        ax.semilogy(n, err, color=color, label=f"{kind.value} observed")
        ax.semilogy(n, bound, color=color, ls=":", label=f"{kind.value} bound")

        slope = rate_fit(reports)
        target = ex.profile(kind).rate
        print(f"{ex_id} {kind.value}: fitted rate {-slope:.3f}, predicted {target:.3f}, "
              f"error at n=50 {err[n == 50][0]:.2e}")
    ax.set_title(ex_id)
    ax.set_xlabel("n")
axes[0].set_ylabel("max error on grid")
axes[0].legend(fontsize=8)
fig.tight_layout()
fig.savefig("convergence.png", dpi=120)
print("wrote convergence.png")
