"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class DegenerateNodes(ValueError):
    """Two interpolation nodes coincide (to working precision)."""
