"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its mathematical domain."""


class ZeroNormState(ValueError):
    """A construction produced a vector of numerically zero norm."""


class DegenerateState(ValueError):
    """The requested state vanishes identically for these parameters."""


class TruncationError(ArithmeticError):
    """The Fock-space cutoff is too small for the requested object."""


class ConvergenceWarning(UserWarning):
    """An approximate gate synthesis is far from its target."""
