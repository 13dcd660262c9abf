"""Exception and warning types shared across the package."""


class FluxmagnonError(Exception):
    """Base class for all package-specific errors."""


class ConfigurationError(FluxmagnonError, ValueError):
    """Invalid configuration input (unknown unit tag, bad scenario key, ...)."""


class GeometryError(FluxmagnonError, ValueError):
    """Invalid or inconsistent geometry (open loop, self-intersection, ...)."""


class SingularFieldError(GeometryError):
    """Field requested too close to a current-carrying wire."""


class DomainError(FluxmagnonError, ValueError):
    """Evaluation point outside the validity domain (e.g. inside a magnet)."""


class DispersiveRegimeError(FluxmagnonError, ValueError):
    """Detuning too small for the dispersive (|detuning| > g) treatment."""


class DispersiveRegimeWarning(UserWarning):
    """Parameters outside the regime the formulas were validated in."""


class ConvergenceWarning(UserWarning):
    """A refinement loop stopped before reaching its tolerance."""
