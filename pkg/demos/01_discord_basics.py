"""Discord and classical correlations of familiar two-qubit states.

Walks through the three textbook cases: a product state carries no
correlations at all, a classically correlated mixture carries one bit of
purely classical correlation, and a Bell pair splits its two bits of mutual
information evenly into one classical and one quantum bit.
"""

import numpy as np

from qdiscord import (
    DensityMatrix,
    StateVector,
    classical_correlation,
    discord,
    quantum_mutual_information,
)


def show(name, rho):
    total = quantum_mutual_information(rho, 0, 1)
    d = discord(rho, 0, 1)
    cc = classical_correlation(rho, 0, 1)
    print(f"{name:28s} total={total:.4f}  classical={cc:.4f}  discord={d.value:.4f}")


product = DensityMatrix(np.diag([0.6 * 0.3, 0.6 * 0.7, 0.4 * 0.3, 0.4 * 0.7]), (2, 2))
classical = DensityMatrix(np.diag([0.5, 0.0, 0.0, 0.5]), (2, 2))
bell = StateVector(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2)).to_density()

print("correlation content in bits (measurement on qubit B):\n")
show("product state", product)
show("classical mixture", classical)
show("Bell pair", bell)

print("\nA Werner-type interpolation between them:")
for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
    rho = DensityMatrix(lam * bell.matrix + (1 - lam) * np.eye(4) / 4, (2, 2))
    show(f"  lambda = {lam:.2f}", rho)
