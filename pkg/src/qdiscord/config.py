"""Optimizer configuration, loadable from simple key = value files."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, replace
from pathlib import Path


@dataclass(frozen=True)
class OptimizerConfig:
    """Settings for the measured-conditional-entropy minimization.

    grid_1q: points per angle of the coarse (theta, phi) scan on one qubit.
    grid_2q: points per parameter of the coarse 8-parameter two-qubit scan
             (entangler angles always cover {0, pi/8, pi/4}).
    refine_tol: simplex diameter at which the refinement stage stops.
    max_evals: evaluation cap per refinement run; 0 disables refinement.
    restarts: extra random restarts for two-qubit searches.
    seed: RNG seed for the restart draws (and anything else stochastic).
    pure_shortcut: skip the scan when the input state is pure, where every
                   rank-1 measurement on the chosen subsystems leaves the
                   remainder pure and the minimum is exactly zero.
    """

    grid_1q: int = 31
    grid_2q: int = 5
    refine_tol: float = 1e-7
    max_evals: int = 2000
    restarts: int = 2
    seed: int = 0
    pure_shortcut: bool = True

    def with_(self, **kwargs) -> "OptimizerConfig":
        return replace(self, **kwargs)

    def to_dict(self) -> dict:
        return asdict(self)

    def hash(self) -> str:
        """Stable hash of the configuration, for run metadata."""
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


_INT_KEYS = {"grid_1q", "grid_2q", "max_evals", "restarts", "seed"}
_FLOAT_KEYS = {"refine_tol"}
_BOOL_KEYS = {"pure_shortcut"}


def load_config(path) -> OptimizerConfig:
    """Parse a config file of `key = value` lines (# starts a comment)."""
    values: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, val = (part.strip() for part in line.partition("="))
        if key in _INT_KEYS:
            values[key] = int(val)
        elif key in _FLOAT_KEYS:
            values[key] = float(val)
        elif key in _BOOL_KEYS:
            values[key] = val.lower() in ("1", "true", "yes", "on")
        else:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
    return OptimizerConfig(**values)
