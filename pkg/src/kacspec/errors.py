class DomainError(ValueError):
    """Input outside the domain of an operation (bad parameters, sizes, poles)."""


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly was found to fail.

    Raised by internal self-checks; seeing one means a formula or a
    transcription of it is wrong, not that the input was bad.
    """
