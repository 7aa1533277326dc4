"""Shared exception types, mapped onto CLI exit codes in cli.py."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration (CLI exit code 2)."""


class CapacityError(ValueError):
    """Requested system size exceeds a hard memory/feasibility ceiling."""


class NumericalError(RuntimeError):
    """Non-finite values produced where finite ones are required (exit code 3)."""


class DivergenceError(NumericalError):
    """Integrator produced NaN/Inf; message names the offending step."""


class ConvergenceTimeout(RuntimeError):
    """Iteration budget exhausted before reaching tolerance (exit code 4)."""

    def __init__(self, message, last_residual=None):
        super().__init__(message)
        self.last_residual = last_residual


class StuckChainError(RuntimeError):
    """Accept-only sampler rejected too many consecutive proposals (exit code 4)."""
