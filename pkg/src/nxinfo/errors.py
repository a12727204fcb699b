"""Exception types raised by the library."""


class DomainError(ValueError):
    """Argument lies outside the domain where a function is defined."""


class InvalidDistributionError(ValueError):
    """Probability vector or joint matrix violates its invariants."""


class ConvergenceError(ArithmeticError):
    """An iterative numeric routine failed to bracket or converge."""
