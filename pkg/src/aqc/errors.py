"""Exception types shared across the package."""


class AqcError(Exception):
    """Base class for errors raised by this package."""


class EnumerationLimitError(AqcError):
    """Raised when a brute-force routine is asked to go past its size cap."""


class ConsistencyError(AqcError, ArithmeticError):
    """An identity that must hold exactly was violated.

    This never signals bad user input; it means either a bug or a failed
    theorem instance, and carries the offending values in its message.
    """
