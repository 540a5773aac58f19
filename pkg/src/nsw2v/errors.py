"""Exception types shared across the package."""


class FormatError(ValueError):
    """Instance or allocation text that violates the file format.

    ``code`` is a stable machine-readable identifier for the failure;
    the message is for humans.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class InvariantViolation(RuntimeError):
    """An internal consistency check failed.  Indicates a solver bug."""


class OracleTooLarge(ValueError):
    """The brute-force search space exceeds the hard enumeration guard."""
