"""Measurement-free information functionals, all in bits (log base 2).

Eigenvalues below 1e-14 are treated as exact zeros inside entropy sums,
so pure states come out at exactly 0.0.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidSubsystemError
from .linalg import DensityMatrix, _check_subsystems, partial_trace

EIG_ZERO = 1e-14


def entropy_from_eigenvalues(w: np.ndarray) -> float:
    """-sum(lam * log2 lam) over eigenvalues above the zero cutoff."""
    w = np.asarray(w, dtype=float)
    w = w[w > EIG_ZERO]
    if w.size == 0:
        return 0.0
    return float(max(-np.sum(w * np.log2(w)), 0.0)) + 0.0


def vn_entropy(rho: DensityMatrix) -> float:
    """Von Neumann entropy S(rho) in bits."""
    w = np.linalg.eigvalsh(rho.matrix)
    return entropy_from_eigenvalues(w)


def _as_subsets(dims, *groups) -> list[tuple[int, ...]]:
    out = []
    seen: set[int] = set()
    for g in groups:
        subs = _check_subsystems(dims, [g] if isinstance(g, (int, np.integer)) else g)
        if seen & set(subs):
            raise InvalidSubsystemError(f"subsystem groups overlap: {groups}")
        seen |= set(subs)
        out.append(subs)
    return out


def unmeasured_conditional_entropy(
    rho: DensityMatrix, target, condition
) -> float:
    """S(rho_{target|condition}) = S(rho_{target+condition}) - S(rho_condition).

    May be negative for entangled states.
    """
    tg, cond = _as_subsets(rho.dims, target, condition)
    joint = partial_trace(rho, tg + cond)
    marginal = partial_trace(rho, cond)
    return vn_entropy(joint) - vn_entropy(marginal)


def quantum_mutual_information(rho: DensityMatrix, part_a, part_b) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB), computed on the reduction to A+B."""
    a, b = _as_subsets(rho.dims, part_a, part_b)
    joint = partial_trace(rho, a + b)
    sa = vn_entropy(partial_trace(rho, a))
    sb = vn_entropy(partial_trace(rho, b))
    return sa + sb - vn_entropy(joint)


def unmeasured_cond_mutual_info(rho: DensityMatrix, a, b, c) -> float:
    """Conditional mutual information S(rho_{a|c}) - S(rho_{a|b,c}), unmeasured form.

    Nonnegative (strong subadditivity) up to numerical slack.
    """
    sa, sb, sc = _as_subsets(rho.dims, a, b, c)
    s_ac = vn_entropy(partial_trace(rho, sa + sc))
    s_c = vn_entropy(partial_trace(rho, sc))
    s_abc = vn_entropy(partial_trace(rho, sa + sb + sc))
    s_bc = vn_entropy(partial_trace(rho, sb + sc))
    return (s_ac - s_c) - (s_abc - s_bc)
