"""
Sampling the auxiliary inequalities
===================================

The bound constants rest on a handful of elementary inequalities. Here we
sample each of them with a fixed seed, print the worst margin found, and
look at the real-line function whose maximum sits at the left end.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from sinc_expdecay.lemmas import limit_values, real_line_value, run_all

for report in run_all(samples=20_000, seed=42):
    status = "ok" if report.passed else "FAILED"
    print(f"{report.check_name:22s} {report.checked:7d} samples  "
          f"worst margin {report.worst_margin:+.2e}  {status}")

# Removable points: the limits below are what the inequality approaches there.
for name, value in limit_values().items():
    print(f"{name:16s} {value:.15f}")

# The real-line quantity stays below one and tends to one as x -> -inf.
x = np.linspace(-20, 20, 801)
fig, ax = plt.subplots(figsize=(6, 4))
ax.plot(x, real_line_value(x))
ax.axhline(1.0, color="k", ls=":")
ax.set_xlabel("x")
ax.set_title("real-line bound")
fig.tight_layout()
fig.savefig("real_line_bound.png", dpi=120)
print("wrote real_line_bound.png")
