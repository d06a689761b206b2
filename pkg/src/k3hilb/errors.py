"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two independent computations of the same quantity disagree
    (formula vs. enumeration, criterion vs. orbit count).  This always
    signals a bug in the library, never bad user input.
    """
