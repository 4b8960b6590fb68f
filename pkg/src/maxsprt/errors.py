class DomainError(ValueError):
    """Input outside the domain of an operation."""


class ConvergenceError(RuntimeError):
    """An iterative search hit its iteration cap or search ceiling."""
