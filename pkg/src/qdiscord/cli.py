"""Command-line interface: analyze | sweep-w | sweep-noise | montecarlo.

Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.
Deterministic outputs go to stdout / --out; timing notes go to stderr.
"""

from __future__ import annotations

import json
from pathlib import Path

import click
import numpy as np

from . import __version__
from .config import OptimizerConfig, load_config
from .errors import NoConvergenceError, QDiscordError
from .harness import (
    VIOLATION_THRESHOLD,
    SweepResult,
    default_workers,
    format_number,
    montecarlo,
    sweep_noise,
    sweep_w,
    write_csv,
)
from .linalg import DensityMatrix
from .monogamy import monogamy_deficit, theorem1_check
from .states import StateSpec, build_state

NODE_CHOICE = click.Choice(["A", "B", "C"], case_sensitive=False)


class NumericalFailure(click.ClickException):
    exit_code = 3


def _fail_usage(message: str):
    raise click.UsageError(message)


def _load_cfg(config_path, seed) -> OptimizerConfig:
    try:
        cfg = load_config(config_path) if config_path else OptimizerConfig()
    except (OSError, ValueError) as exc:
        _fail_usage(f"cannot load config: {exc}")
    if seed is not None:
        cfg = cfg.with_(seed=int(seed))
    return cfg


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        n, m = text.lower().split("x")
        return int(n), int(m)
    except ValueError:
        _fail_usage(f"--grid expects <n>x<m>, got {text!r}")


def _echo_json(payload: dict):
    click.echo(json.dumps(payload, indent=2, sort_keys=True))


def _write_sweep(result: SweepResult, out, fmt: str):
    if fmt == "csv":
        if out is None:
            _fail_usage("csv output needs --out <path>")
        with open(out, "w") as fh:
            result.to_csv(fh)
    else:
        doc = json.dumps(result.to_dict(), indent=2, sort_keys=True)
        if out is None:
            click.echo(doc)
        else:
            Path(out).write_text(doc + "\n")
    summary = {"metadata": result.metadata, "rows": len(result.params)}
    if result.crossovers:
        summary["crossovers"] = result.crossovers
    if out is not None:
        summary["out"] = str(out)
        _echo_json(summary)
    click.echo(f"wall_time_s={result.wall_time_s:.2f}", err=True)


@click.group()
@click.version_option(__version__)
def main():
    """Quantum discord monogamy toolkit."""


@main.command()
@click.option("--family", type=click.Choice(StateSpec.FAMILIES), default=None,
              help="State family built from the flags below.")
@click.option("--phi", type=float, default=None, help="Family angle phi (radians).")
@click.option("--theta", type=float, default=None, help="Family angle theta (radians).")
@click.option("--p", "noise_p", type=float, default=None,
              help="Pseudo-pure weight: analyze (1-p) I/8 + p |psi><psi|.")
@click.option("--spec-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON state spec, e.g. {\"family\":\"gen_w\",\"theta\":0.955,\"phi\":0.785}.")
@click.option("--density", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON density matrix file {dims, re, im}.")
@click.option("--node", type=NODE_CHOICE, default="A", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--seed", type=int, default=None, help="Optimizer restart seed override.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Also write the report to this file.")
def analyze(family, phi, theta, noise_p, spec_file, density, node, config_path, seed, fmt, out):
    """Monogamy report (discords, delta_m, interaction informations,
    theorem consistency) for one state."""
    cfg = _load_cfg(config_path, seed)
    rho, described = _build_analyze_state(family, phi, theta, noise_p, spec_file, density)
    try:
        report = monogamy_deficit(rho, node, cfg)
        check = theorem1_check(rho, node, cfg)
    except (NoConvergenceError, np.linalg.LinAlgError) as exc:
        raise NumericalFailure(str(exc))
    payload = {
        "state": described,
        "report": report.to_dict(),
        "theorem1": {
            "delta_m": check.delta_m,
            "interaction_gap": check.interaction_gap,
            "consistent": check.consistent,
            "dead_band": check.dead_band,
        },
        "metadata": {"config_hash": cfg.hash(), "toolkit_version": __version__},
    }
    _echo_json(payload)
    if out is not None:
        if fmt == "json":
            Path(out).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            with open(out, "w") as fh:
                header = ["family", "state_params"] + list(report.CSV_FIELDS)
                row = [described.get("family", "density"),
                       ";".join(_flatten_params(described))] + report.csv_row()
                write_csv(fh, header, [row])


def _flatten_params(described: dict, prefix: str = "") -> list[str]:
    """Comma-free key=value fragments for the CSV state-spec column."""
    out = []
    for key, value in described.items():
        if key == "family" and not prefix:
            continue
        if isinstance(value, dict):
            out.extend(_flatten_params(value, f"{prefix}{key}."))
        elif isinstance(value, (list, tuple)):
            flat = json.dumps(value, separators=("|", ":"))
            out.append(f"{prefix}{key}={flat}")
        else:
            out.append(f"{prefix}{key}={format_number(value)}")
    return out


def _build_analyze_state(family, phi, theta, noise_p, spec_file, density):
    sources = sum(x is not None for x in (family, spec_file, density))
    if sources != 1:
        _fail_usage("provide exactly one of --family, --spec-file, --density")
    try:
        if density is not None:
            rho = DensityMatrix.from_json(Path(density).read_text())
            return rho, {"density_file": str(density), "dims": list(rho.dims)}
        if spec_file is not None:
            spec = StateSpec.from_dict(json.loads(Path(spec_file).read_text()))
        else:
            params = {}
            if phi is not None:
                params["phi"] = phi
            if theta is not None:
                params["theta"] = theta
            if noise_p is not None:
                params = {"p": noise_p, "inner": {"family": family, **params}}
                spec = StateSpec(family="pseudo_pure", params=params)
            else:
                spec = StateSpec(family=family, params=params)
        state = build_state(spec)
        rho = state if isinstance(state, DensityMatrix) else state.to_density()
        return rho, spec.to_dict()
    except QDiscordError as exc:
        _fail_usage(str(exc))
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        _fail_usage(f"invalid state specification: {exc}")


@main.command("sweep-w")
@click.option("--grid", default="25x25", show_default=True, help="theta x phi grid counts.")
@click.option("--node", type=NODE_CHOICE, default="A", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_sweep_w(grid, node, config_path, seed, fmt, out):
    """delta_m surface of generalized W states over the (theta, phi) grid."""
    n_theta, n_phi = _parse_grid(grid)
    cfg = _load_cfg(config_path, seed)
    try:
        result = sweep_w(n_theta, n_phi, cfg, node=node, workers=default_workers())
    except ValueError as exc:
        _fail_usage(str(exc))
    except (NoConvergenceError, np.linalg.LinAlgError) as exc:
        raise NumericalFailure(str(exc))
    _check_finite(r.delta_m for r in result.reports)
    _write_sweep(result, out, fmt)


@main.command("sweep-noise")
@click.option("--family", type=click.Choice(["gen_ghz", "gen_w"]), required=True)
@click.option("--theta", type=float, default=None, help="gen_w theta; default sweeps 4 curves.")
@click.option("--phi", type=float, default=None, help="State angle; default sweeps a grid.")
@click.option("--p-grid", "p_count", type=int, default=41, show_default=True)
@click.option("--phi-grid", "phi_count", type=int, default=9, show_default=True,
              help="gen_ghz phi-axis count when --phi is not given.")
@click.option("--node", type=NODE_CHOICE, default="A", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def cmd_sweep_noise(family, theta, phi, p_count, phi_count, node, config_path, seed, fmt, out):
    """delta_m of pseudo-pure states against the mixing parameter p."""
    cfg = _load_cfg(config_path, seed)
    try:
        result = sweep_noise(
            family, p_count, cfg, theta=theta, phi=phi, phi_count=phi_count,
            node=node, workers=default_workers(),
        )
    except ValueError as exc:
        _fail_usage(str(exc))
    except (NoConvergenceError, np.linalg.LinAlgError) as exc:
        raise NumericalFailure(str(exc))
    _check_finite(r.delta_m for r in result.reports)
    _write_sweep(result, out, fmt)


@main.command("montecarlo")
@click.option("--family", type=click.Choice(["ghz_class", "w_class"]), required=True)
@click.option("--samples", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--node", type=NODE_CHOICE, default="A", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Stream per-sample delta_m records to this CSV.")
def cmd_montecarlo(family, samples, seed, node, config_path, out):
    """Monogamy-violation fraction over random class members."""
    cfg = _load_cfg(config_path, None)
    try:
        result = montecarlo(
            family, samples, seed=seed, cfg=cfg, node=node,
            workers=default_workers(), keep_samples=out is not None,
        )
    except ValueError as exc:
        _fail_usage(str(exc))
    except (NoConvergenceError, np.linalg.LinAlgError) as exc:
        raise NumericalFailure(str(exc))
    if out is not None:
        with open(out, "w") as fh:
            write_csv(
                fh,
                ["index", "delta_m", "violates"],
                ([i, d, bool(d > VIOLATION_THRESHOLD)] for i, d in enumerate(result.deltas)),
            )
    _echo_json(result.to_dict())
    click.echo(f"wall_time_s={result.wall_time_s:.2f}", err=True)


def _check_finite(values):
    bad = [v for v in values if not np.isfinite(v)]
    if bad:
        raise NumericalFailure(f"{len(bad)} grid points produced non-finite delta_m")
