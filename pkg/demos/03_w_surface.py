"""Coarse version of the generalized-W deficit surface.

Reproduces the structure of the delta_m(theta, phi) surface on a small grid:
strictly positive everywhere in the interior, largest near the equal-weight
region, falling toward zero at the product-state boundaries. The full-scale
run is `qdiscord sweep-w --grid 25x25 --out w_surface.csv`.
"""

import numpy as np

from qdiscord import OptimizerConfig
from qdiscord.harness import sweep_w

result = sweep_w(7, 7, OptimizerConfig())
thetas = result.axes["theta"]
phis = result.axes["phi"]

print("delta_m (bits) over the (theta, phi) grid; rows = theta, cols = phi\n")
print("          " + " ".join(f"{p:7.3f}" for p in phis))
deltas = np.array([r.delta_m for r in result.reports]).reshape(len(thetas), len(phis))
for th, row in zip(thetas, deltas):
    print(f"theta={th:5.3f} " + " ".join(f"{v:7.4f}" for v in row))

print(f"\nminimum over the grid: {deltas.min():.6f} (every point violates monogamy)")
