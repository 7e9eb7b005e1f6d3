"""Exception types shared across the package."""


class ConstructionError(ValueError):
    """A graph oracle or builder produced inconsistent data."""


class SpecError(ValueError):
    """An assembly/color/config specification failed validation."""


class SolverError(RuntimeError):
    """An iterative solve or quadrature did not reach its tolerance."""
