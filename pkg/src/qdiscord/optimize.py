"""Derivative-free simplex minimizer used to refine grid-scan minima."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np


class SimplexResult(NamedTuple):
    x: np.ndarray
    fun: float
    evals: int
    converged: bool


def nelder_mead(
    fun: Callable[[np.ndarray], float],
    x0: np.ndarray,
    step: float = 0.25,
    diameter_tol: float = 1e-7,
    max_evals: int = 2000,
) -> SimplexResult:
    """Minimize `fun` from `x0`, stopping when the simplex diameter drops
    below `diameter_tol` or the evaluation budget runs out.

    Standard coefficients: reflection 1, expansion 2, contraction 0.5,
    shrink 0.5. Deterministic for a given (fun, x0).
    """
    alpha, gamma, rho_c, sigma = 1.0, 2.0, 0.5, 0.5
    x0 = np.asarray(x0, dtype=float)
    n = x0.size
    evals = 0

    def f(x):
        nonlocal evals
        evals += 1
        return fun(x)

    pts = [x0]
    for i in range(n):
        xi = x0.copy()
        xi[i] += step
        pts.append(xi)
    simplex = [(f(p), p) for p in pts]
    simplex.sort(key=lambda t: t[0])

    while evals < max_evals:
        diam = max(
            float(np.max(np.abs(p - simplex[0][1]))) for _, p in simplex[1:]
        )
        if diam < diameter_tol:
            return SimplexResult(simplex[0][1], simplex[0][0], evals, True)

        centroid = np.mean([p for _, p in simplex[:-1]], axis=0)
        worst_f, worst_x = simplex[-1]

        xr = centroid + alpha * (centroid - worst_x)
        fr = f(xr)
        if simplex[0][0] <= fr < simplex[-2][0]:
            simplex[-1] = (fr, xr)
        elif fr < simplex[0][0]:
            xe = centroid + gamma * (centroid - worst_x)
            fe = f(xe)
            simplex[-1] = (fe, xe) if fe < fr else (fr, xr)
        else:
            xc = centroid + rho_c * (worst_x - centroid)
            fc = f(xc)
            if fc < worst_f:
                simplex[-1] = (fc, xc)
            else:
                best = simplex[0][1]
                simplex = [simplex[0]] + [
                    (f(best + sigma * (p - best)), best + sigma * (p - best))
                    for _, p in simplex[1:]
                ]
        simplex.sort(key=lambda t: t[0])

    return SimplexResult(simplex[0][1], simplex[0][0], evals, False)
