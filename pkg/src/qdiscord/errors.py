"""Exception types raised throughout the toolkit."""


class QDiscordError(Exception):
    """Base class for all toolkit-specific errors."""


class NotHermitianError(QDiscordError, ValueError):
    """Matrix fails the Hermiticity check."""


class NotUnitTraceError(QDiscordError, ValueError):
    """Density matrix trace differs from 1 beyond tolerance."""


class NotPositiveError(QDiscordError, ValueError):
    """Density matrix has an eigenvalue below the negativity tolerance."""


class InvalidSubsystemError(QDiscordError, ValueError):
    """Subsystem index set is out of range, empty, or overlapping."""


class NoConvergenceError(QDiscordError, RuntimeError):
    """Iterative eigensolver failed to converge."""


class UnsupportedSubsystemSizeError(QDiscordError, ValueError):
    """Measurement optimization requested on more than two qubits."""


class DegenerateStateError(QDiscordError, ValueError):
    """State construction produced a (near-)zero vector."""
