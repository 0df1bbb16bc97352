"""Numerical toolkit for quantum discord and its monogamy on small multi-qubit states."""

from .config import OptimizerConfig, load_config
from .discord import (
    DiscordResult,
    MinimizationResult,
    classical_correlation,
    discord,
    measured_conditional_entropy,
    min_conditional_entropy,
)
from .entropy import (
    quantum_mutual_information,
    unmeasured_cond_mutual_info,
    unmeasured_conditional_entropy,
    vn_entropy,
)
from .errors import (
    DegenerateStateError,
    InvalidSubsystemError,
    NoConvergenceError,
    NotHermitianError,
    NotPositiveError,
    NotUnitTraceError,
    QDiscordError,
    UnsupportedSubsystemSizeError,
)
from .linalg import (
    DensityMatrix,
    StateVector,
    hermitian_eig,
    kron,
    partial_trace,
    project_and_normalize,
    validate_density,
)
from .measurement import MeasurementBasis, qubit_basis, two_qubit_basis
from .monogamy import (
    MonogamyReport,
    Theorem1Check,
    cyclic_interaction_identity_gap,
    interrogated_interaction_info,
    monogamy_deficit,
    theorem1_check,
    unmeasured_interaction_info,
)
from .states import (
    StateSpec,
    build_state,
    gen_ghz,
    gen_w,
    ghz_class,
    ghz_class_random,
    pseudo_pure,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    w_class,
    w_class_random,
)

__version__ = "0.1.0"

__all__ = [
    "OptimizerConfig",
    "load_config",
    "DiscordResult",
    "MinimizationResult",
    "classical_correlation",
    "discord",
    "measured_conditional_entropy",
    "min_conditional_entropy",
    "quantum_mutual_information",
    "unmeasured_cond_mutual_info",
    "unmeasured_conditional_entropy",
    "vn_entropy",
    "QDiscordError",
    "NotHermitianError",
    "NotUnitTraceError",
    "NotPositiveError",
    "InvalidSubsystemError",
    "NoConvergenceError",
    "UnsupportedSubsystemSizeError",
    "DegenerateStateError",
    "DensityMatrix",
    "StateVector",
    "hermitian_eig",
    "kron",
    "partial_trace",
    "project_and_normalize",
    "validate_density",
    "MeasurementBasis",
    "qubit_basis",
    "two_qubit_basis",
    "MonogamyReport",
    "Theorem1Check",
    "cyclic_interaction_identity_gap",
    "interrogated_interaction_info",
    "monogamy_deficit",
    "theorem1_check",
    "unmeasured_interaction_info",
    "StateSpec",
    "build_state",
    "gen_ghz",
    "gen_w",
    "ghz_class",
    "ghz_class_random",
    "pseudo_pure",
    "random_density_matrix",
    "random_pure_state",
    "random_unitary",
    "w_class",
    "w_class_random",
    "__version__",
]
