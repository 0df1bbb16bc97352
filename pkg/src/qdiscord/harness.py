"""Reproducible sweep and Monte Carlo engines behind the command-line tool.

All engines are deterministic for a given seed and configuration: Monte Carlo
samples draw from per-index child seeds, so results do not depend on how the
work is partitioned across workers.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

import numpy as np

from . import __version__
from .config import OptimizerConfig
from .linalg import DensityMatrix
from .monogamy import MonogamyReport, monogamy_deficit
from .states import StateVector, gen_ghz, gen_w, ghz_class_random, pseudo_pure, w_class_random

VIOLATION_THRESHOLD = 1e-5

# default interior sampling window for the (theta, phi) surface: closer to the
# boundary the state degenerates to a product and delta_m drops under the
# violation threshold
W_SWEEP_INSET = np.pi / 20.0

# default generalized-W curves for the noise sweep (phi = pi/4 throughout)
NOISE_W_THETAS = (np.pi / 6.0, np.pi / 4.0, float(np.arccos(1.0 / np.sqrt(3.0))), np.pi / 3.0)


def default_workers() -> int:
    """Worker cap from DISCORD_NUM_WORKERS (default 1, serial)."""
    raw = os.environ.get("DISCORD_NUM_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_metadata(cfg: OptimizerConfig, seed=None, **extra) -> dict:
    meta = {"config_hash": cfg.hash(), "toolkit_version": __version__}
    if seed is not None:
        meta["seed"] = int(seed)
    meta.update(extra)
    return meta


@dataclass
class SweepResult:
    """Grid labels, one report per grid point, and run metadata."""

    axes: dict
    params: list[dict]
    reports: list[MonogamyReport]
    metadata: dict
    wall_time_s: float = 0.0
    crossovers: list[dict] = field(default_factory=list)

    def __post_init__(self):
        if len(self.params) != len(self.reports):
            raise ValueError("one report per grid point required")

    def csv_header(self) -> list[str]:
        param_keys = list(self.params[0].keys()) if self.params else []
        return param_keys + ["d_ab", "d_ac", "d_a_bc", "delta_m"]

    def csv_rows(self):
        for p, r in zip(self.params, self.reports):
            yield list(p.values()) + [r.d_ab, r.d_ac, r.d_a_bc, r.delta_m]

    def to_csv(self, stream):
        write_csv(stream, self.csv_header(), self.csv_rows())

    def to_dict(self) -> dict:
        return {
            "axes": self.axes,
            "metadata": self.metadata,
            "crossovers": self.crossovers,
            "records": [
                {**p, **r.to_dict()} for p, r in zip(self.params, self.reports)
            ],
        }


@dataclass
class MonteCarloResult:
    """Violation statistics over random draws of one state family."""

    family: str
    samples: int
    violations: int
    seed: int
    delta_min: float
    delta_max: float
    delta_mean: float
    metadata: dict
    wall_time_s: float = 0.0
    deltas: np.ndarray | None = None

    @property
    def fraction(self) -> float:
        return self.violations / self.samples if self.samples else 0.0

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "samples": self.samples,
            "violations": self.violations,
            "violation_fraction": self.fraction,
            "seed": self.seed,
            "delta_m_min": self.delta_min,
            "delta_m_max": self.delta_max,
            "delta_m_mean": self.delta_mean,
            "violation_threshold": VIOLATION_THRESHOLD,
            "metadata": self.metadata,
        }


def format_number(x) -> str:
    """12 significant digits, period decimal separator."""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.12g}"
    return str(x)


def write_csv(stream, header: list[str], rows) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(format_number(v) for v in row) + "\n")


def _report_for(rho: DensityMatrix, node: str, cfg: OptimizerConfig) -> MonogamyReport:
    return monogamy_deficit(rho, node, cfg)


_POOL_STATE: dict = {}


def _pool_init(node, cfg):
    _POOL_STATE["node"] = node
    _POOL_STATE["cfg"] = cfg


def _pool_eval_state(args):
    idx, matrix, dims = args
    rho = DensityMatrix(matrix, dims)
    return idx, _report_for(rho, _POOL_STATE["node"], _POOL_STATE["cfg"])


def _map_reports(states, node, cfg, workers) -> list[MonogamyReport]:
    states = list(states)
    if workers <= 1 or len(states) < 2 * workers:
        return [_report_for(rho, node, cfg) for rho in states]
    jobs = [(i, rho.matrix, rho.dims) for i, rho in enumerate(states)]
    out: list = [None] * len(states)
    with Pool(workers, initializer=_pool_init, initargs=(node, cfg)) as pool:
        for idx, report in pool.imap_unordered(_pool_eval_state, jobs, chunksize=8):
            out[idx] = report
    return out


def sweep_w(
    n_theta: int,
    n_phi: int,
    cfg: OptimizerConfig | None = None,
    theta_range: tuple[float, float] | None = None,
    phi_range: tuple[float, float] | None = None,
    node: str = "A",
    workers: int | None = None,
) -> SweepResult:
    """delta_m surface of the generalized W family over a (theta, phi) grid.

    Default ranges sample the open interval (0, pi/2) inset by pi/20.
    """
    if n_theta < 2 or n_phi < 2:
        raise ValueError("sweep grid needs at least 2 points per axis")
    cfg = cfg or OptimizerConfig()
    lo, hi = W_SWEEP_INSET, np.pi / 2.0 - W_SWEEP_INSET
    t0, t1 = theta_range if theta_range else (lo, hi)
    p0, p1 = phi_range if phi_range else (lo, hi)
    for v in (t0, t1, p0, p1):
        if not 0.0 < v < np.pi / 2.0:
            raise ValueError("theta and phi must stay inside the open interval (0, pi/2)")
    thetas = np.linspace(t0, t1, n_theta)
    phis = np.linspace(p0, p1, n_phi)

    start = time.perf_counter()
    params = [
        {"theta": float(th), "phi": float(ph)} for th in thetas for ph in phis
    ]
    states = [gen_w(p["theta"], p["phi"]).to_density() for p in params]
    reports = _map_reports(states, node, cfg, workers or default_workers())
    wall = time.perf_counter() - start

    return SweepResult(
        axes={"theta": thetas.tolist(), "phi": phis.tolist()},
        params=params,
        reports=reports,
        metadata=_run_metadata(cfg, node=node, family="gen_w",
                               grid=[n_theta, n_phi]),
        wall_time_s=wall,
    )


def _noise_curves(family: str, theta, phi, phi_count: int):
    """(curve-label dict, pure state) pairs for the noise sweep."""
    if family == "gen_w":
        if theta is None:
            curves = [{"theta": float(t), "phi": float(np.pi / 4.0)} for t in NOISE_W_THETAS]
        else:
            curves = [{"theta": float(theta), "phi": float(phi if phi is not None else np.pi / 4)}]
        return [(c, gen_w(c["theta"], c["phi"])) for c in curves]
    if family == "gen_ghz":
        if phi is None:
            grid = np.linspace(0.0, np.pi / 2.0, phi_count + 2)[1:-1]
            curves = [{"phi": float(v)} for v in grid]
        else:
            curves = [{"phi": float(phi)}]
        return [(c, gen_ghz(c["phi"])) for c in curves]
    raise ValueError(f"noise sweep supports gen_ghz or gen_w, got {family!r}")


def _bisect_crossover(psi: StateVector, node, cfg, p_lo, p_hi, iters: int = 14) -> float:
    """Refine the p where delta_m changes sign, given delta(p_lo) <= 0 < delta(p_hi)."""
    for _ in range(iters):
        mid = 0.5 * (p_lo + p_hi)
        d = monogamy_deficit(pseudo_pure(psi, mid), node, cfg).delta_m
        if d > 0.0:
            p_hi = mid
        else:
            p_lo = mid
    return 0.5 * (p_lo + p_hi)


def sweep_noise(
    family: str,
    p_count: int = 41,
    cfg: OptimizerConfig | None = None,
    theta: float | None = None,
    phi: float | None = None,
    phi_count: int = 9,
    node: str = "A",
    workers: int | None = None,
    locate_crossover: bool = True,
) -> SweepResult:
    """delta_m of pseudo-pure states (1-p) I/8 + p |psi><psi| along a p grid.

    gen_w without explicit angles sweeps the documented default set of four
    curves at phi = pi/4; gen_ghz without phi sweeps a (p, phi) surface.
    For each gen_w curve whose deficit changes sign, the crossover p* is
    located by bisection.
    """
    if p_count < 2:
        raise ValueError("p grid needs at least 2 points")
    cfg = cfg or OptimizerConfig()
    ps = np.linspace(0.0, 1.0, p_count)
    curves = _noise_curves(family, theta, phi, phi_count)

    start = time.perf_counter()
    params = []
    states = []
    for label, psi in curves:
        for p in ps:
            params.append({"p": float(p), **label})
            states.append(pseudo_pure(psi, float(p)))
    reports = _map_reports(states, node, cfg, workers or default_workers())

    crossovers = []
    if locate_crossover and family == "gen_w":
        per_curve = len(ps)
        for k, (label, psi) in enumerate(curves):
            deltas = [r.delta_m for r in reports[k * per_curve : (k + 1) * per_curve]]
            bracket = None
            for i in range(len(ps) - 1, 0, -1):
                if deltas[i] > 0.0 >= deltas[i - 1]:
                    bracket = (float(ps[i - 1]), float(ps[i]))
                    break
            if bracket:
                p_star = _bisect_crossover(psi, node, cfg, *bracket)
                crossovers.append({**label, "p_star": float(p_star)})
    wall = time.perf_counter() - start

    return SweepResult(
        axes={"p": ps.tolist(), "curves": [label for label, _ in curves]},
        params=params,
        reports=reports,
        metadata=_run_metadata(cfg, node=node, family=family, p_count=p_count),
        wall_time_s=wall,
        crossovers=crossovers,
    )


_MC_FAMILIES = {
    "ghz_class": ghz_class_random,
    "w_class": w_class_random,
}


def _mc_sample_delta(args):
    family, entropy, node, cfg = args
    rng = np.random.default_rng(np.random.SeedSequence(entropy=entropy))
    psi = _MC_FAMILIES[family](rng)
    return monogamy_deficit(psi.to_density(), node, cfg).delta_m


def montecarlo(
    family: str,
    n: int,
    seed: int = 0,
    cfg: OptimizerConfig | None = None,
    node: str = "A",
    workers: int | None = None,
    keep_samples: bool = False,
) -> MonteCarloResult:
    """Violation fraction of delta_m > 1e-5 over n random family members.

    Sample i draws from child seed (seed, i), so merged runs and any worker
    partitioning give identical per-sample results.
    """
    if family not in _MC_FAMILIES:
        raise ValueError(f"unknown Monte Carlo family {family!r}")
    if n < 1:
        raise ValueError("sample count must be at least 1")
    cfg = cfg or OptimizerConfig()
    workers = workers or default_workers()

    start = time.perf_counter()
    jobs = [(family, (int(seed), i), node, cfg) for i in range(n)]
    if workers <= 1 or n < 2 * workers:
        deltas = np.array([_mc_sample_delta(j) for j in jobs])
    else:
        deltas = np.empty(n)
        with Pool(workers) as pool:
            for i, d in enumerate(pool.imap(_mc_sample_delta, jobs, chunksize=64)):
                deltas[i] = d
    wall = time.perf_counter() - start

    violations = int(np.sum(deltas > VIOLATION_THRESHOLD))
    return MonteCarloResult(
        family=family,
        samples=n,
        violations=violations,
        seed=int(seed),
        delta_min=float(deltas.min()),
        delta_max=float(deltas.max()),
        delta_mean=float(deltas.mean()),
        metadata=_run_metadata(cfg, seed=seed, node=node),
        wall_time_s=wall,
        deltas=deltas if keep_samples else None,
    )
