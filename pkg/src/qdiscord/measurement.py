"""Rank-1 projective measurement bases on one- and two-qubit subsystems."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MeasurementBasis:
    """Complete set of mutually orthogonal rank-1 projectors on `subsystems`.

    `params` is the generating parameter vector in radians: (theta, phi) for
    one qubit, the 8-vector (th1, ph1, la1, th2, ph2, la2, gamma, delta) for
    two qubits.
    """

    subsystems: tuple[int, ...]
    projectors: tuple[np.ndarray, ...]
    params: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "subsystems", tuple(int(s) for s in self.subsystems))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

    @property
    def n_outcomes(self) -> int:
        return len(self.projectors)


def qubit_unitary(theta: float, phi: float, lam: float) -> np.ndarray:
    """General single-qubit unitary with three Euler-like angles."""
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return np.array(
        [
            [c, -np.exp(1j * lam) * s],
            [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c],
        ],
        dtype=complex,
    )


def qubit_basis_vectors(theta: float, phi: float) -> np.ndarray:
    """Columns: |v> = cos(t/2)|0> + e^{i phi} sin(t/2)|1> and its orthocomplement."""
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    e = np.exp(1j * phi)
    return np.array([[c, -s], [e * s, e * c]], dtype=complex)


def qubit_basis(theta: float, phi: float, subsystem: int = 0) -> MeasurementBasis:
    """Projective basis {|v><v|, |v_perp><v_perp|} on one qubit."""
    v = qubit_basis_vectors(theta, phi)
    projs = tuple(np.outer(v[:, j], v[:, j].conj()) for j in range(2))
    return MeasurementBasis((subsystem,), projs, (theta, phi))


def entangler(gamma: float, delta: float) -> np.ndarray:
    """Rotation by gamma in the {|00>,|11>} plane and delta in {|01>,|10>}.

    Identity at gamma = delta = 0; all four columns maximally entangled at
    gamma = delta = pi/4.
    """
    cg, sg = np.cos(gamma), np.sin(gamma)
    cd, sd = np.cos(delta), np.sin(delta)
    e = np.zeros((4, 4), dtype=complex)
    e[0, 0], e[3, 0] = cg, sg
    e[0, 3], e[3, 3] = -sg, cg
    e[1, 1], e[2, 1] = cd, sd
    e[1, 2], e[2, 2] = -sd, cd
    return e


def two_qubit_basis_vectors(params: np.ndarray) -> np.ndarray:
    """Columns of (U1 x U2) E(gamma, delta): a 4-outcome orthonormal basis."""
    th1, ph1, la1, th2, ph2, la2, gamma, delta = (float(p) for p in params)
    u12 = np.kron(qubit_unitary(th1, ph1, la1), qubit_unitary(th2, ph2, la2))
    return u12 @ entangler(gamma, delta)


def two_qubit_basis(params, subsystems: tuple[int, int] = (0, 1)) -> MeasurementBasis:
    """Entangler-family 4-outcome projective basis on two qubits.

    At all-zero params this is the computational product basis; the entangler
    angles sweep it through maximally entangled (Bell-type) bases.
    """
    params = np.asarray(params, dtype=float)
    if params.shape != (8,):
        raise ValueError("two_qubit_basis takes an 8-real parameter vector")
    w = two_qubit_basis_vectors(params)
    projs = tuple(np.outer(w[:, j], w[:, j].conj()) for j in range(4))
    return MeasurementBasis(tuple(subsystems), projs, tuple(params))
