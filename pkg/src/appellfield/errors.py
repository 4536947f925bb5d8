"""Exception hierarchy shared by all appellfield modules."""


class AppellFieldError(Exception):
    """Base class for errors raised by this package."""


class DomainError(AppellFieldError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation requested at (or too close to) a genuine singularity:
    poles, singular elliptic characteristics, charged surfaces, edge circles,
    coincident points."""


class ConvergenceError(AppellFieldError, ArithmeticError):
    """A series or adaptive scheme exhausted its term/subdivision budget."""
