"""Exception types shared across the package."""


class TableParseError(ValueError):
    """Malformed table file. Carries the line/column when the JSON layer knows it."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class InconsistentTableError(ValueError):
    """The table data contradicts character theory (corrupted input)."""


class NotPIntegralError(ValueError):
    """A value with p in its denominator was reduced modulo p."""


class NotRationalError(ValueError):
    pass


class InvariantViolation(RuntimeError):
    """An internal consistency check failed. Indicates a bug, not bad input."""


class OracleCapExceeded(ValueError):
    pass


class NotInPrimeFieldError(ValueError):
    """A cyclotomic value does not reduce into F_p under the chosen embedding."""
