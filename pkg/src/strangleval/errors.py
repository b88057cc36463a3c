"""Exception types shared across the package."""


class StrangleValError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(StrangleValError):
    """A parameter lies outside the mathematical domain of the requested quantity."""


class DegenerateNuError(DomainError):
    """nu is below the supported minimum; the nu -> 0 limit is bound(delta)."""


class InputError(StrangleValError):
    """Malformed or unusable input data: files, CSV rows, chain contents."""


class ConvergenceError(StrangleValError):
    """A root-finder failed to bracket or converge; indicates a bug, not bad input."""
