"""Dense complex linear algebra over small multi-qubit Hilbert spaces.

Convention used everywhere in this package: subsystem 0 (party A) is the
most significant tensor factor, so the basis ket |abc> of three qubits maps
to row index 4a + 2b + c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidSubsystemError,
    NoConvergenceError,
    NotHermitianError,
    NotPositiveError,
    NotUnitTraceError,
)

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
POSITIVITY_TOL = 1e-10
ZERO_PROBABILITY = 1e-12


def _as_complex(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator with subsystem dims.

    Instances are immutable; the underlying array is marked read-only so
    values are safe to share between concurrent workers.
    """

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(np.asarray(self.matrix, dtype=complex)))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        d = int(np.prod(self.dims))
        if self.matrix.shape != (d, d):
            raise InvalidSubsystemError(
                f"matrix shape {self.matrix.shape} does not match dims {self.dims}"
            )

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.purity() - 1.0) <= tol

    def to_json(self) -> str:
        """Serialize to the {dims, re, im} row-major JSON format."""
        payload = {
            "dims": list(self.dims),
            "re": self.matrix.real.tolist(),
            "im": self.matrix.imag.tolist(),
        }
        return json.dumps(payload)

    @staticmethod
    def from_json(text: str) -> "DensityMatrix":
        payload = json.loads(text)
        m = np.asarray(payload["re"], dtype=float) + 1j * np.asarray(payload["im"], dtype=float)
        return validate_density(m, payload["dims"])


@dataclass(frozen=True)
class StateVector:
    """Unit-norm pure state with subsystem dims."""

    amplitudes: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        object.__setattr__(self, "amplitudes", _frozen(amps))
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        d = int(np.prod(self.dims))
        if self.amplitudes.shape != (d,):
            raise InvalidSubsystemError(
                f"amplitude count {self.amplitudes.shape} does not match dims {self.dims}"
            )
        norm2 = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm2 - 1.0) > 1e-10:
            raise ValueError(f"state vector norm^2 = {norm2} is not 1 within 1e-10")

    def to_density(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()), self.dims)


def kron(a, b) -> np.ndarray:
    """Tensor (Kronecker) product of two matrices."""
    return np.kron(_as_complex(a), _as_complex(b))


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def hermiticity_defect(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def hermitian_eig(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, eigenvectors as orthonormal columns)
    with m = V diag(w) V^dagger.
    """
    a = _as_complex(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("hermitian_eig requires a square matrix")
    if hermiticity_defect(a) > HERMITICITY_TOL:
        raise NotHermitianError(
            f"matrix is not Hermitian (max asymmetry {hermiticity_defect(a):.3e})"
        )
    try:
        w, v = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return w, v


def _check_subsystems(dims: Sequence[int], subsystems: Iterable[int]) -> tuple[int, ...]:
    subs = tuple(int(s) for s in subsystems)
    if len(subs) == 0:
        raise InvalidSubsystemError("subsystem set must be nonempty")
    if len(set(subs)) != len(subs):
        raise InvalidSubsystemError(f"duplicate subsystem indices in {subs}")
    for s in subs:
        if not 0 <= s < len(dims):
            raise InvalidSubsystemError(f"subsystem {s} out of range for dims {tuple(dims)}")
    return subs


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out all subsystems not in `keep`; kept subsystems stay in original order."""
    keep_set = set(_check_subsystems(rho.dims, keep))
    n = rho.n_subsystems
    kept = [i for i in range(n) if i in keep_set]
    if len(kept) == n:
        return rho
    dims = rho.dims
    t = rho.matrix.reshape(dims + dims)
    # contract bra/ket axes of each traced subsystem
    for count, i in enumerate(sorted(set(range(n)) - keep_set)):
        axis = i - count  # axes shift left as we trace
        t = np.trace(t, axis1=axis, axis2=axis + (n - count))
    d_keep = int(np.prod([dims[i] for i in kept]))
    return DensityMatrix(t.reshape(d_keep, d_keep), tuple(dims[i] for i in kept))


def embed_operator(op: np.ndarray, on: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Lift an operator acting on subsystems `on` (jointly) to the full space.

    Handles non-contiguous and permuted subsystem sets via axis permutation.
    """
    on = list(_check_subsystems(dims, on))
    dims = [int(d) for d in dims]
    rest = [i for i in range(len(dims)) if i not in on]
    d_on = int(np.prod([dims[i] for i in on]))
    if op.shape != (d_on, d_on):
        raise InvalidSubsystemError(f"operator shape {op.shape} does not act on dims of {on}")
    full = np.kron(op, np.eye(int(np.prod([dims[i] for i in rest])) if rest else 1, dtype=complex))
    order = on + rest
    if order == sorted(order):
        return full
    # permute tensor axes from (on..., rest...) ordering back to canonical order
    perm = np.argsort(order)
    td = [dims[i] for i in order]
    t = full.reshape(td + td)
    t = np.transpose(t, tuple(perm) + tuple(len(dims) + p for p in perm))
    d = int(np.prod(dims))
    return t.reshape(d, d)


def project_and_normalize(
    rho: DensityMatrix, projector: np.ndarray, on: Sequence[int]
) -> tuple[float, DensityMatrix | None]:
    """Apply a projector on subsystems `on`, returning (probability, conditional state).

    The conditional state lives on the unmeasured subsystems (original order).
    Outcomes with probability below 1e-12 report the state as None.
    """
    proj = _as_complex(projector)
    if hermiticity_defect(proj) > 1e-9 or np.max(np.abs(proj @ proj - proj)) > 1e-9:
        raise ValueError("projector must be Hermitian and idempotent within 1e-9")
    full = embed_operator(proj, on, rho.dims)
    projected = full @ rho.matrix @ full
    p = float(np.trace(projected).real)
    if p < ZERO_PROBABILITY:
        return max(p, 0.0), None
    on_set = set(int(i) for i in on)
    rest = [i for i in range(rho.n_subsystems) if i not in on_set]
    reduced = partial_trace(DensityMatrix(projected / p, rho.dims), rest if rest else on)
    return p, reduced


def validate_density(m, dims) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity; clip round-off negatives.

    Eigenvalues in [-1e-10, 0) are treated as round-off: the spectrum is
    clipped into [0, 1] and renormalized. Anything more negative is an error.
    """
    a = _as_complex(m)
    dims = tuple(int(d) for d in np.atleast_1d(dims))
    d = int(np.prod(dims))
    if a.shape != (d, d):
        raise InvalidSubsystemError(f"matrix shape {a.shape} does not match dims {dims}")
    if hermiticity_defect(a) > HERMITICITY_TOL:
        raise NotHermitianError(
            f"max |M - M^dagger| entry = {hermiticity_defect(a):.3e} exceeds {HERMITICITY_TOL}"
        )
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotUnitTraceError(f"trace = {tr} differs from 1 beyond {TRACE_TOL}")
    w, v = hermitian_eig(a)
    if w[0] < -POSITIVITY_TOL:
        raise NotPositiveError(f"smallest eigenvalue {w[0]:.3e} below -{POSITIVITY_TOL}")
    if w[0] < 0.0 or w[-1] > 1.0:
        w = np.clip(w, 0.0, 1.0)
        w = w / w.sum()
        a = (v * w) @ v.conj().T
        a = 0.5 * (a + a.conj().T)
    return DensityMatrix(a, dims)
