"""Quantum discord: measured conditional entropy minimized over projective bases.

The minimization is a deterministic coarse grid scan followed by simplex
refinement from the best grid point (plus seeded random restarts for
two-qubit searches). Grid evaluations are vectorized over all bases at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import OptimizerConfig
from .entropy import (
    EIG_ZERO,
    quantum_mutual_information,
    unmeasured_conditional_entropy,
)
from .errors import InvalidSubsystemError, UnsupportedSubsystemSizeError
from .linalg import DensityMatrix, _check_subsystems, partial_trace
from .measurement import MeasurementBasis
from .optimize import nelder_mead

ZERO_PROBABILITY = 1e-12
_CHUNK = 1 << 16


class MinimizationResult(NamedTuple):
    value: float
    params: np.ndarray
    evals: int
    converged: bool


@dataclass(frozen=True)
class DiscordResult:
    """Optimized discord value (bits) plus optimizer diagnostics."""

    value: float
    optimal_params: tuple[float, ...]
    optimizer_evals: int
    converged: bool


def _xlog2x(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    mask = x > EIG_ZERO
    out[mask] = x[mask] * np.log2(x[mask])
    return out


def _rho_blocks(rho: DensityMatrix, measured: tuple[int, ...]) -> tuple[np.ndarray, int, int]:
    """Reshape rho to (dR, dM, dR, dM) with the measured subsystems trailing."""
    dims = rho.dims
    n = len(dims)
    rest = [i for i in range(n) if i not in measured]
    order = rest + list(measured)
    t = rho.matrix.reshape(dims + dims)
    t = np.transpose(t, tuple(order) + tuple(n + i for i in order))
    d_rest = int(np.prod([dims[i] for i in rest]))
    d_meas = int(np.prod([dims[i] for i in measured]))
    return np.ascontiguousarray(t.reshape(d_rest, d_meas, d_rest, d_meas)), d_rest, d_meas


def _batch_values(rho_t: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Measured conditional entropy sum_j p_j S(rho_{R|j}) for a batch of bases.

    rho_t: (dR, dM, dR, dM); w: (b, dM, n_out) with basis vectors as columns.
    """
    d_rest = rho_t.shape[0]
    wc = w.conj()
    if d_rest == 2:
        # 2x2 conditional blocks in closed form
        blocks = []
        for r, s in ((0, 0), (1, 1), (0, 1)):
            y = rho_t[r, :, s, :] @ w
            blocks.append(np.einsum("bmj,bmj->bj", wc, y))
        a = blocks[0].real
        d = blocks[1].real
        off2 = blocks[2].real ** 2 + blocks[2].imag ** 2
        p = a + d
        half_gap = 0.5 * (a - d)
        radius = np.sqrt(half_gap * half_gap + off2)
        lam_hi = 0.5 * p + radius
        lam_lo = np.clip(0.5 * p - radius, 0.0, None)
        contrib = _xlog2x(p) - _xlog2x(lam_hi) - _xlog2x(lam_lo)
        return np.maximum(contrib.sum(axis=1), 0.0)
    cond = np.einsum("bmj,rmsn,bnj->bjrs", wc, rho_t, w, optimize=True)
    mu = np.clip(np.linalg.eigvalsh(cond), 0.0, None)
    p = mu.sum(axis=-1)
    contrib = _xlog2x(p) - _xlog2x(mu).sum(axis=-1)
    return np.maximum(contrib.sum(axis=1), 0.0)


def _qubit_vectors_batch(theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    e = np.exp(1j * phi)
    w = np.empty(theta.shape + (2, 2), dtype=complex)
    w[..., 0, 0] = c
    w[..., 0, 1] = -s
    w[..., 1, 0] = e * s
    w[..., 1, 1] = e * c
    return w


def _qubit_unitary_batch(theta, phi, lam) -> np.ndarray:
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    u = np.empty(theta.shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c
    u[..., 0, 1] = -np.exp(1j * lam) * s
    u[..., 1, 0] = np.exp(1j * phi) * s
    u[..., 1, 1] = np.exp(1j * (phi + lam)) * c
    return u


def _two_qubit_vectors_batch(params: np.ndarray) -> np.ndarray:
    th1, ph1, la1, th2, ph2, la2, gamma, delta = params.T
    u1 = _qubit_unitary_batch(th1, ph1, la1)
    u2 = _qubit_unitary_batch(th2, ph2, la2)
    u12 = np.einsum("bik,bjl->bijkl", u1, u2).reshape(-1, 4, 4)
    b = params.shape[0]
    ent = np.zeros((b, 4, 4), dtype=complex)
    cg, sg = np.cos(gamma), np.sin(gamma)
    cd, sd = np.cos(delta), np.sin(delta)
    ent[:, 0, 0] = cg
    ent[:, 3, 0] = sg
    ent[:, 0, 3] = -sg
    ent[:, 3, 3] = cg
    ent[:, 1, 1] = cd
    ent[:, 2, 1] = sd
    ent[:, 1, 2] = -sd
    ent[:, 2, 2] = cd
    return u12 @ ent


def _vectors_for(n_qubits: int, params: np.ndarray) -> np.ndarray:
    if n_qubits == 1:
        return _qubit_vectors_batch(params[:, 0], params[:, 1])
    return _two_qubit_vectors_batch(params)


def _value_single(rho_t: np.ndarray, n_qubits: int, x: np.ndarray) -> float:
    """Scalar-path evaluation of one basis, for the refinement stage."""
    if rho_t.shape[0] != 2:
        return float(_batch_values(rho_t, _vectors_for(n_qubits, x[None, :]))[0])
    if n_qubits == 1:
        w = _qubit_vectors_batch(np.asarray(x[0]), np.asarray(x[1]))
    else:
        w = _two_qubit_vectors_batch(x[None, :])[0]
    wc = w.conj()
    a = np.einsum("mj,mn,nj->j", wc, rho_t[0, :, 0, :], w).real
    d = np.einsum("mj,mn,nj->j", wc, rho_t[1, :, 1, :], w).real
    off = np.einsum("mj,mn,nj->j", wc, rho_t[0, :, 1, :], w)
    total = 0.0
    log2 = np.log2
    for j in range(a.size):
        p = a[j] + d[j]
        if p < ZERO_PROBABILITY:
            continue
        half_gap = 0.5 * (a[j] - d[j])
        radius = np.sqrt(half_gap * half_gap + off[j].real ** 2 + off[j].imag ** 2)
        hi = 0.5 * p + radius
        lo = 0.5 * p - radius
        s = p * log2(p)
        if hi > EIG_ZERO:
            s -= hi * log2(hi)
        if lo > EIG_ZERO:
            s -= lo * log2(lo)
        total += s
    return max(total, 0.0)


def _grid_params(n_qubits: int, cfg: OptimizerConfig) -> np.ndarray:
    if n_qubits == 1:
        g = max(int(cfg.grid_1q), 2)
        thetas = np.linspace(0.0, np.pi, g)
        phis = np.linspace(0.0, 2.0 * np.pi, g, endpoint=False)
        axes = [thetas, phis]
    else:
        g = max(int(cfg.grid_2q), 2)
        theta_ax = np.linspace(0.0, np.pi, g)
        phase_ax = np.linspace(0.0, 2.0 * np.pi, g, endpoint=False)
        ent_ax = np.unique(
            np.concatenate([np.linspace(0.0, np.pi / 4.0, g), [0.0, np.pi / 8.0, np.pi / 4.0]])
        )
        axes = [theta_ax, phase_ax, phase_ax, theta_ax, phase_ax, phase_ax, ent_ax, ent_ax]
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)


# the coarse grid and its basis vectors depend only on the resolution, not on
# the state; keep the most recent ones (the two-qubit stack is ~100 MB)
_GRID_CACHE: dict[tuple[int, int], tuple[np.ndarray, np.ndarray]] = {}


def _grid_with_vectors(n_qubits: int, cfg: OptimizerConfig) -> tuple[np.ndarray, np.ndarray]:
    key = (n_qubits, int(cfg.grid_1q if n_qubits == 1 else cfg.grid_2q))
    cached = _GRID_CACHE.get(key)
    if cached is not None:
        return cached
    grid = _grid_params(n_qubits, cfg)
    dim = 2 if n_qubits == 1 else 4
    vectors = np.empty((grid.shape[0], dim, dim), dtype=complex)
    for start in range(0, grid.shape[0], _CHUNK):
        chunk = grid[start : start + _CHUNK]
        vectors[start : start + chunk.shape[0]] = _vectors_for(n_qubits, chunk)
    if len(_GRID_CACHE) >= 2:
        _GRID_CACHE.clear()
    _GRID_CACHE[key] = (grid, vectors)
    return grid, vectors


def _measured_tuple(dims, measured) -> tuple[int, ...]:
    if isinstance(measured, (int, np.integer)):
        measured = (int(measured),)
    return tuple(sorted(_check_subsystems(dims, measured)))


def measured_conditional_entropy(rho: DensityMatrix, basis: MeasurementBasis) -> float:
    """sum_i p_i S(rho_{rest|i}) for one fixed basis; outcomes with
    probability below 1e-12 contribute zero."""
    measured = _measured_tuple(rho.dims, basis.subsystems)
    if len(measured) == rho.n_subsystems:
        raise InvalidSubsystemError("measurement must leave at least one subsystem")
    rho_t, _, d_meas = _rho_blocks(rho, measured)
    if basis.projectors[0].shape != (d_meas, d_meas):
        raise InvalidSubsystemError("basis projectors do not match measured dimensions")
    total = 0.0
    for proj in basis.projectors:
        cond = np.einsum("mn,rnsl,lm->rs", proj, rho_t, proj)
        p = float(np.trace(cond).real)
        if p < ZERO_PROBABILITY:
            continue
        mu = np.clip(np.linalg.eigvalsh(cond), 0.0, None)
        total += float(_xlog2x(np.array([p]))[0] - _xlog2x(mu).sum())
    return max(total, 0.0)


def min_conditional_entropy(
    rho: DensityMatrix, measured, cfg: OptimizerConfig | None = None
) -> MinimizationResult:
    """Minimize the measured conditional entropy over the projective bases
    of one or two measured qubits.

    Deterministic for a given config: grid scan, then simplex refinement
    from the best grid point (and, for two qubits, from seeded random
    restarts). For a globally pure state every rank-1 measurement leaves
    the remainder pure, so the minimum is exactly zero; with
    cfg.pure_shortcut the scan is skipped in that case.
    """
    cfg = cfg or OptimizerConfig()
    measured = _measured_tuple(rho.dims, measured)
    if len(measured) == rho.n_subsystems:
        raise InvalidSubsystemError("measurement must leave at least one subsystem")
    if any(rho.dims[i] != 2 for i in measured) or len(measured) > 2:
        raise UnsupportedSubsystemSizeError(
            f"measurement optimization supports one or two qubits, got dims "
            f"{tuple(rho.dims[i] for i in measured)}"
        )
    n_qubits = len(measured)
    n_params = 2 if n_qubits == 1 else 8

    if cfg.pure_shortcut and rho.is_pure():
        return MinimizationResult(0.0, np.zeros(n_params), 0, True)

    rho_t, _, _ = _rho_blocks(rho, measured)

    grid, vectors = _grid_with_vectors(n_qubits, cfg)
    best_val = np.inf
    best_x = grid[0]
    for start in range(0, grid.shape[0], _CHUNK):
        vals = _batch_values(rho_t, vectors[start : start + _CHUNK])
        k = int(np.argmin(vals))
        if vals[k] < best_val:
            best_val = float(vals[k])
            best_x = grid[start + k]
    evals = grid.shape[0]

    if cfg.max_evals <= 0:
        return MinimizationResult(best_val, np.asarray(best_x, dtype=float), evals, True)

    def objective(x: np.ndarray) -> float:
        return _value_single(rho_t, n_qubits, x)

    starts = [np.asarray(best_x, dtype=float)]
    if n_qubits == 2 and cfg.restarts > 0:
        rng = np.random.default_rng(cfg.seed)
        los = np.zeros(8)
        his = np.array([np.pi, 2 * np.pi, 2 * np.pi, np.pi, 2 * np.pi, 2 * np.pi,
                        np.pi / 4, np.pi / 4])
        for _ in range(cfg.restarts):
            starts.append(rng.uniform(los, his))

    value, x_opt, converged = best_val, np.asarray(best_x, dtype=float), True
    for x0 in starts:
        res = nelder_mead(
            objective, x0, step=0.2, diameter_tol=cfg.refine_tol, max_evals=cfg.max_evals
        )
        evals += res.evals
        if not res.converged:
            converged = False
        if res.fun < value:
            value, x_opt = res.fun, res.x
    return MinimizationResult(value, x_opt, evals, converged)


def _disjoint_groups(dims, unmeasured, measured) -> tuple[tuple[int, ...], tuple[int, ...]]:
    un = _measured_tuple(dims, unmeasured)
    me = _measured_tuple(dims, measured)
    if set(un) & set(me):
        raise InvalidSubsystemError("unmeasured and measured subsystems overlap")
    return un, me


def _reduce_for(rho: DensityMatrix, un, me):
    keep = sorted(un + me)
    reduced = partial_trace(rho, keep)
    pos = {orig: k for k, orig in enumerate(keep)}
    return reduced, tuple(pos[i] for i in un), tuple(pos[i] for i in me)


def discord(
    rho: DensityMatrix, unmeasured, measured, cfg: OptimizerConfig | None = None
) -> DiscordResult:
    """Quantum discord D = min_basis S(rest|measurement) - S~(rest|measured).

    The state is first reduced to unmeasured + measured subsystems; the
    measurement acts on `measured`.
    """
    cfg = cfg or OptimizerConfig()
    un, me = _disjoint_groups(rho.dims, unmeasured, measured)
    reduced, un_r, me_r = _reduce_for(rho, un, me)
    m = min_conditional_entropy(reduced, me_r, cfg)
    s_tilde = unmeasured_conditional_entropy(reduced, un_r, me_r)
    return DiscordResult(m.value - s_tilde, tuple(float(p) for p in m.params),
                         m.evals, m.converged)


def classical_correlation(
    rho: DensityMatrix, unmeasured, measured, cfg: OptimizerConfig | None = None
) -> float:
    """Classical correlations: mutual information minus discord, one shared
    optimization run."""
    cfg = cfg or OptimizerConfig()
    un, me = _disjoint_groups(rho.dims, unmeasured, measured)
    reduced, un_r, me_r = _reduce_for(rho, un, me)
    d = discord(reduced, un_r, me_r, cfg)
    return quantum_mutual_information(reduced, un_r, me_r) - d.value
