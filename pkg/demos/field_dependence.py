"""E against B for the plane (alpha = 1) and a cone with alpha = 0.7.

lambda = s = +1, eta = -1, massless, j = n for each curve.  Every curve is
an exact square root in B, and the cone levels sit below the planar ones.
"""
import numpy as np

from doublecone.landau import figure3_data, fit_power_law

B = np.linspace(0.1, 10, 50)
rows = figure3_data([1.0, 0.7], [(0, 0), (1, 1), (2, 2)], B)
curves = {}
for alpha, n, j, b, e in rows:
    curves.setdefault((alpha, n), []).append(e)
for (alpha, n), e in sorted(curves.items()):
    c, p = fit_power_law(B, e)
    print(f"alpha={alpha:.1f} n={n}: E = {c:.6f} B^{p:.9f}   E(B=10) = {e[-1]:.4f}")
print("cone below plane everywhere:",
      all(a < b for n in range(3) for a, b in zip(curves[(0.7, n)], curves[(1.0, n)])))
