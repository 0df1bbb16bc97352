"""Monte Carlo violation statistics over the two tripartite classes.

Random W-class members violate discord monogamy without exception; random
GHZ-class members violate only part of the time, so the deficit's sign acts
as a one-sided detector of the GHZ class. This desk-scale run uses 500
samples per class; the full experiment is
`qdiscord montecarlo --family ghz_class --samples 25000 --seed 2026`.
"""

from qdiscord.harness import montecarlo

for family in ("w_class", "ghz_class"):
    res = montecarlo(family, 500, seed=7, keep_samples=True)
    print(f"{family}: {res.violations}/{res.samples} violate "
          f"(fraction {res.fraction:.3f})")
    print(f"  delta_m range [{res.delta_min:+.4f}, {res.delta_max:+.4f}],"
          f" mean {res.delta_mean:+.4f}")
    hist, edges = [], [-0.8, -0.4, -0.2, -0.05, 0.0, 0.05, 0.2, 0.4]
    for lo, hi in zip(edges[:-1], edges[1:]):
        n = int(((res.deltas >= lo) & (res.deltas < hi)).sum())
        hist.append(f"  [{lo:+.2f},{hi:+.2f}) {'#' * (n // 5)}{n:4d}")
    print("\n".join(hist))
    print()
