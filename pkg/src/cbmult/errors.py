"""Exception taxonomy shared by every module.

The CLI maps these onto process exit codes, so new error conditions should
reuse one of the classes below rather than invent another.
"""


class CbmultError(Exception):
    """Base class for all library errors."""


class DomainError(CbmultError):
    """Input violates a documented precondition (bad value, bad shape)."""


class ConfigurationError(CbmultError):
    """Inputs are individually valid but jointly inconsistent, e.g. a grid
    too coarse for the requested exclusion radius, or colliding windows."""


class ConvergenceError(CbmultError):
    """An iterative solve hit its cap without meeting its residual target."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ResourceError(CbmultError):
    """Requested problem size exceeds the documented desk-scale limits."""
