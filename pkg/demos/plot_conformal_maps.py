"""
The two maps onto the half line
===============================

Both maps send the real line onto (0, inf). The arcsinh map only stays
analytic in a strip of half-width pi/2, while log(1 + e^x) stays analytic
up to half-width pi. This script draws the image of the strip boundary
for a few widths so the shapes of the two domains can be compared.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from sinc_expdecay import MapKind, domain_boundary, map_forward, map_inverse

# Real-line behaviour: both maps look like e^x as x -> -inf. For large x the
# log map approaches x while the arcsinh map approaches x + log 2.
x = np.linspace(-6, 6, 7)
for kind in MapKind:
    print(kind.value, np.round(map_forward(kind, x), 6))

# The inverse is what the evaluator actually uses; it must not lose digits
# for tiny or huge t.
t = np.array([2.0 ** -50, 1.0, 2.0 ** 50])
for kind in MapKind:
    back = map_forward(kind, map_inverse(kind, t))
    print(kind.value, "round trip rel. error", np.max(np.abs(back - t) / t))

# Boundary curves of the image domains. Widths close to the maximum
# for each map produce the widest domains.
fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, kind, widths in [(axes[0], MapKind.ARCSINH, (0.5, 1.0, 1.5)),
                         (axes[1], MapKind.LOGISTIC_LOG, (0.5, 1.5, 3.0))]:
    for d in widths:
        curve = domain_boundary(kind, d, -8.0, 4.0, 600)
        line, = ax.plot(curve.upper.real, curve.upper.imag, label=f"d = {d}")
        ax.plot(curve.lower.real, curve.lower.imag, color=line.get_color())
    ax.set_title(kind.value)
    ax.set_xlabel("Re t")
    ax.axhline(0, color="k", lw=0.5)
    ax.legend()
axes[0].set_ylabel("Im t")
fig.tight_layout()
fig.savefig("conformal_domains.png", dpi=120)
print("wrote conformal_domains.png")
